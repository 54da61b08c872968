"""Stiefel frames and the closed polygons they parameterize."""

from polyhopf.polygons.actions import fiber_act_frame, su2_apply_frame, word_apply_frame
from polyhopf.polygons.pipeline import fiber_rank, lift, normalize, phi_k, rotate_polygon
from polyhopf.polygons.quotient import (
    equivalent_mod_O,
    equivalent_mod_SO,
    gram_deviation,
    quotient_invariant,
)
from polyhopf.polygons.sampling import sample_ensemble, sample_polygons, sample_stiefel
from polyhopf.polygons.types import (
    PolygonConfig,
    QuotientInvariant,
    StiefelFrame,
    frame_residuals,
)
from polyhopf.polygons.witness import EquivalenceWitness, aligning_rotation, equivalence_witness

__all__ = [
    "EquivalenceWitness",
    "PolygonConfig",
    "QuotientInvariant",
    "StiefelFrame",
    "aligning_rotation",
    "equivalence_witness",
    "equivalent_mod_O",
    "equivalent_mod_SO",
    "fiber_act_frame",
    "fiber_rank",
    "frame_residuals",
    "gram_deviation",
    "lift",
    "normalize",
    "phi_k",
    "quotient_invariant",
    "rotate_polygon",
    "sample_ensemble",
    "sample_polygons",
    "sample_stiefel",
    "su2_apply_frame",
    "word_apply_frame",
]
