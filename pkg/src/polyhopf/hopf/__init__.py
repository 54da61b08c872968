"""Modified Hopf maps F^2 -> R + F, closed-form preimages and fiber actions."""

from polyhopf.hopf.maps import (
    fiber_act,
    fiber_act_coeffs,
    fiber_witness,
    fiber_witness_coeffs,
    hopf_phi,
    hopf_preimage,
    hopf_vector_coeffs,
    hopf_vectors,
    preimage_coeffs,
)
from polyhopf.hopf.types import HopfImage, Spinor, UnitElement

__all__ = [
    "HopfImage",
    "Spinor",
    "UnitElement",
    "fiber_act",
    "fiber_act_coeffs",
    "fiber_witness",
    "fiber_witness_coeffs",
    "hopf_phi",
    "hopf_preimage",
    "hopf_vector_coeffs",
    "hopf_vectors",
    "preimage_coeffs",
]
