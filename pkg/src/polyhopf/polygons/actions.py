"""
Group actions on Stiefel frames, applied column by column.

SU(2, F) acts from the left on every column, F(1)^k acts on the right with one unit per column,
and over the octonions generator words take the place of SU(2, O).
"""

from collections.abc import Sequence

import numpy as np

from polyhopf.algebra.element import AlgebraTag
from polyhopf.config import get_settings
from polyhopf.hopf.maps import fiber_act_coeffs
from polyhopf.hopf.types import UnitElement
from polyhopf.polygons.types import StiefelFrame
from polyhopf.spin.generators import GeneratorWord, word_apply_coeffs
from polyhopf.spin.unitary import SpecialUnitary2, require_associative, su2_apply_coeffs
from polyhopf.utils.errors import AlgebraMismatchError, DimensionMismatchError


def fiber_act_frame(frame: StiefelFrame, units: Sequence[UnitElement]) -> StiefelFrame:
    """Act on column i by units[i]."""
    if len(units) != frame.k:
        raise DimensionMismatchError("fiber elements", frame.k, len(units))
    for unit in units:
        if unit.tag is not frame.tag:
            raise AlgebraMismatchError(frame.tag, unit.tag)
    c = np.stack([unit.value.coeffs for unit in units])
    x, y = fiber_act_coeffs(
        frame.x,
        frame.y,
        c,
        octonionic=frame.tag is AlgebraTag.OCTONION,
        zero_tol=get_settings().zero_tol,
    )
    return StiefelFrame(frame.tag, np.stack([x, y], axis=1))


def su2_apply_frame(A: SpecialUnitary2, frame: StiefelFrame) -> StiefelFrame:
    """A . X = (A(x_1, y_1), ..., A(x_k, y_k))."""
    require_associative(frame.tag, "su2_apply_frame")
    if A.tag is not frame.tag:
        raise AlgebraMismatchError(A.tag, frame.tag)
    return StiefelFrame(frame.tag, su2_apply_coeffs(A.entries, frame.columns))


def word_apply_frame(word: GeneratorWord, frame: StiefelFrame) -> StiefelFrame:
    if word.tag is not frame.tag:
        raise AlgebraMismatchError(word.tag, frame.tag)
    x, y = word_apply_coeffs(word, frame.x, frame.y)
    return StiefelFrame(frame.tag, np.stack([x, y], axis=1))
