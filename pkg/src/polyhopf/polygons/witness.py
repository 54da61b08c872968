"""
Explicit witnesses for equivalent polygons.

If phi_k(X) and phi_k(Y) lie in the same SO(n) class, there is a rotation R between them, a group
element acting on frames that induces R, and a tuple of fiber elements turning the rotated frame
into Y. This module constructs all three and reports the residual of the chain.
"""

from dataclasses import dataclass

import numpy as np

from polyhopf.algebra.element import AlgebraTag
from polyhopf.config import get_settings
from polyhopf.hopf.maps import fiber_witness
from polyhopf.hopf.types import UnitElement
from polyhopf.polygons.actions import fiber_act_frame, su2_apply_frame, word_apply_frame
from polyhopf.polygons.pipeline import phi_k
from polyhopf.polygons.types import PolygonConfig, StiefelFrame
from polyhopf.spin.cartan import unitary_from_rotation, word_from_rotation
from polyhopf.spin.generators import GeneratorWord
from polyhopf.spin.rotation import Rotation
from polyhopf.spin.unitary import SpecialUnitary2
from polyhopf.utils.errors import AlgebraMismatchError
from polyhopf.utils.logging import get_logger

logger = get_logger(__name__)


def aligning_rotation(p: PolygonConfig, q: PolygonConfig) -> Rotation:
    """
    The R in SO(n) minimizing |R p - q| (Kabsch), with the determinant sign forced to +1.

    For rank-deficient configurations the sign fix acts on an unused direction, so R p = q is
    still attained whenever the polygons are SO(n)-equivalent.
    """
    correlation = q.edges.T @ p.edges
    left, _, right = np.linalg.svd(correlation)
    signs = np.ones(p.n)
    signs[-1] = np.sign(np.linalg.det(left @ right)) or 1.0
    return Rotation(left @ np.diag(signs) @ right)


@dataclass(frozen=True, eq=False)
class EquivalenceWitness:
    """R with R phi_k(X) = phi_k(Y), a frame action inducing R, and per-column fiber elements."""

    rotation: Rotation
    group_element: GeneratorWord | SpecialUnitary2
    fibers: tuple[UnitElement | None, ...]
    residual: float


def equivalence_witness(source: StiefelFrame, target: StiefelFrame) -> EquivalenceWitness:
    """
    Build the witness chain from source to target.

    Columns whose spinors are zero carry no fiber element (None). The residual is the larger of
    the rotation mismatch on the polygons and the final frame mismatch; it is infinite when some
    column of the rotated source does not share a Hopf image with the target.
    """
    if source.tag is not target.tag:
        raise AlgebraMismatchError(source.tag, target.tag)
    tag = source.tag
    p, q = phi_k(source), phi_k(target)
    rotation = aligning_rotation(p, q)
    rotation_residual = float(np.max(np.abs(rotation.apply(p.edges) - q.edges)))

    group_element: GeneratorWord | SpecialUnitary2
    if tag is AlgebraTag.OCTONION:
        group_element = word_from_rotation(rotation, tag)
        moved = word_apply_frame(group_element, source)
    else:
        group_element = unitary_from_rotation(rotation, tag)
        moved = su2_apply_frame(group_element, source)

    settings = get_settings()
    tol = settings.witness_tol
    lengths = q.edge_lengths()
    fibers: list[UnitElement | None] = []
    missing = False
    for i in range(source.k):
        if lengths[i] < settings.edge_zero_tol:
            fibers.append(None)
            continue
        witness = fiber_witness(moved.column(i), target.column(i), tol=tol)
        missing = missing or witness is None
        fibers.append(witness)

    if missing:
        residual = float("inf")
    else:
        units = [f if f is not None else UnitElement.one(tag) for f in fibers]
        frame_residual = fiber_act_frame(moved, units).distance(target)
        residual = max(rotation_residual, frame_residual)
    logger.debug(
        "Equivalence witness built",
        extra={"algebra": tag.symbol, "k": source.k, "residual": residual},
    )
    return EquivalenceWitness(rotation, group_element, tuple(fibers), residual)

