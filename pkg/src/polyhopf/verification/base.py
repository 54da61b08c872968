"""
Property checks.

A property check evaluates one identity on many random inputs and reports the largest residual it
saw. Residuals are relative: each trial's error is divided by the natural scale of its operands,
so a single tolerance works for operands of any size. Exact checks (table relations, integer
identities) run with tolerance zero and ignore any tolerance override.
"""

import time
from abc import ABC, abstractmethod
from typing import ClassVar

import numpy as np

from polyhopf.algebra.element import AlgebraTag
from polyhopf.algebra.kernels import norm_sq_coeffs
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import Settings, get_settings
from polyhopf.models.reports import PropertyResult
from polyhopf.utils.errors import PolyHopfError
from polyhopf.utils.logging import get_logger

logger = get_logger(__name__)

ALL_TAGS: tuple[AlgebraTag, ...] = tuple(AlgebraTag)
ASSOCIATIVE_TAGS: tuple[AlgebraTag, ...] = tuple(tag for tag in AlgebraTag if tag.associative)


class PropertyCheck(ABC):
    """
    Base class for the properties run by ``polyhopf verify``.

    Subclasses set ``name`` and ``suite``, choose the settings field that holds their tolerance,
    and implement ``evaluate``. Errors raised while evaluating are turned into a failed result
    with an infinite residual so that one broken property never hides the others.
    """

    name: ClassVar[str]
    suite: ClassVar[str]
    tolerance_field: ClassVar[str] = "default_tol"
    exact: ClassVar[bool] = False

    def trial_count(self, requested: int) -> int:
        """Number of trials actually evaluated for a requested count."""
        return requested

    def tolerance(self, settings: Settings, override: float | None = None) -> float:
        if self.exact:
            return 0.0
        if override is not None:
            return override
        return float(getattr(settings, self.tolerance_field))

    @abstractmethod
    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        """Return the largest residual over the given number of trials."""

    def run(
        self,
        trials: int,
        seed: int,
        tol: float | None = None,
        settings: Settings | None = None,
    ) -> PropertyResult:
        """
        Evaluate the property on its own random stream.

        Args:
            trials: Requested trial count
            seed: Integer seed of this property's stream
            tol: Tolerance override for non-exact properties
            settings: Source of the default tolerance

        Returns:
            PropertyResult with the max residual and the pass/fail decision
        """
        settings = settings or get_settings()
        count = self.trial_count(trials)
        tolerance = self.tolerance(settings, tol)
        rng = np.random.default_rng(seed)
        error: str | None = None

        start = time.perf_counter()
        try:
            residual = float(self.evaluate(count, rng))
        except (PolyHopfError, ArithmeticError, ValueError, np.linalg.LinAlgError) as exc:
            residual = float("inf")
            error = f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start

        if np.isnan(residual):
            residual = float("inf")
        passed = residual <= tolerance
        extra = {
            "property": self.name,
            "suite": self.suite,
            "max_residual": residual,
            "tolerance": tolerance,
            "trials": count,
            "seed": seed,
            "elapsed_seconds": round(elapsed, 4),
        }
        if passed:
            logger.info("Property passed", extra=extra)
        else:
            logger.warning("Property failed", extra={**extra, "error": error})

        return PropertyResult(
            name=self.name,
            suite=self.suite,
            passed=passed,
            max_residual=residual,
            tolerance=tolerance,
            trials=count,
            seed=seed,
            error=error,
        )


def gaussian(rng: np.random.Generator, count: int, trials: int, dim: int) -> FloatArray:
    """Gaussian elements of shape (count, trials, dim), one batch per operand."""
    return rng.standard_normal((count, trials, dim))


def random_units(rng: np.random.Generator, shape: tuple[int, ...], dim: int) -> FloatArray:
    """Uniform points on the unit sphere of F, shape (*shape, dim)."""
    raw = rng.standard_normal(shape + (dim,))
    return raw / np.sqrt(norm_sq_coeffs(raw))[..., None]


def norms(a: FloatArray) -> FloatArray:
    return np.sqrt(norm_sq_coeffs(a))


def relative_gap(lhs: FloatArray, rhs: FloatArray, scale: FloatArray | float) -> float:
    """max over the batch of |lhs - rhs| / scale, the norm taken over the last axis."""
    gap = np.linalg.norm(np.asarray(lhs) - np.asarray(rhs), axis=-1)
    return float(np.max(gap / np.maximum(scale, np.finfo(np.float64).tiny)))


def relative_scalar_gap(lhs: FloatArray, rhs: FloatArray, scale: FloatArray | float) -> float:
    gap = np.abs(np.asarray(lhs) - np.asarray(rhs))
    return float(np.max(gap / np.maximum(scale, np.finfo(np.float64).tiny)))
