"""
Shared fixtures.

Settings are cached process-wide by get_settings(); every test starts from a fresh cache so that
environment overrides made with monkeypatch take effect and do not leak into other tests.
"""

import logging

import numpy as np
import pytest

from polyhopf.algebra import kernels
from polyhopf.algebra.element import AlgebraTag
from polyhopf.config import get_settings
from polyhopf.utils.run_context import clear_run_id


@pytest.fixture(autouse=True)
def fresh_settings():
    """Clear the settings cache and run id before and after each test."""
    get_settings.cache_clear()
    clear_run_id()
    yield
    get_settings.cache_clear()
    clear_run_id()


@pytest.fixture(autouse=True)
def restore_root_logger():
    """The CLI reconfigures the root logger; put the original handlers back afterwards."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def rng():
    """Seeded generator for reproducible random inputs."""
    return np.random.default_rng(20240611)


@pytest.fixture(params=list(AlgebraTag), ids=lambda tag: tag.symbol)
def tag(request):
    """Each of R, C, H and O in turn."""
    return request.param


@pytest.fixture(params=[t for t in AlgebraTag if t.associative], ids=lambda tag: tag.symbol)
def associative_tag(request):
    """Each of R, C and H in turn."""
    return request.param


@pytest.fixture
def corrupted_octonions(monkeypatch):
    """Flip the sign of e1 e2 = e4 in the octonion structure tensor used by every product."""
    original = kernels.structure_tensor

    def corrupted(dim: int) -> np.ndarray:
        tensor = original(dim)
        if dim != 8:
            return tensor
        tensor = tensor.copy()
        tensor[1 * 8 + 2, 4] = -tensor[1 * 8 + 2, 4]
        return tensor

    monkeypatch.setattr(kernels, "structure_tensor", corrupted)
