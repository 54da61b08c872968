"""
Hypothesis strategies for algebra values.

Coefficients are bounded so that products of a few elements stay far from overflow and the
relative tolerances of the library apply.
"""

import numpy as np
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.hopf.types import Spinor, UnitElement
from polyhopf.spin.generators import SpinGenerator

COEFF_BOUND = 10.0

tags = st.sampled_from(list(AlgebraTag))

coefficients = st.floats(
    min_value=-COEFF_BOUND, max_value=COEFF_BOUND, allow_nan=False, allow_infinity=False
)


def coeff_arrays(dim: int) -> st.SearchStrategy[np.ndarray]:
    return arrays(np.float64, (dim,), elements=coefficients)


def elements(tag: AlgebraTag) -> st.SearchStrategy[AlgebraElement]:
    return coeff_arrays(tag.dim).map(lambda coeffs: AlgebraElement(tag, coeffs))


def nonzero_elements(tag: AlgebraTag, min_norm: float = 1e-3) -> st.SearchStrategy[AlgebraElement]:
    return elements(tag).filter(lambda a: float(np.linalg.norm(a.coeffs)) >= min_norm)


def unit_elements(tag: AlgebraTag) -> st.SearchStrategy[UnitElement]:
    return nonzero_elements(tag, min_norm=1e-2).map(UnitElement.normalized)


def spinors(tag: AlgebraTag) -> st.SearchStrategy[Spinor]:
    return st.builds(Spinor, elements(tag), elements(tag))


def generators(tag: AlgebraTag) -> st.SearchStrategy[SpinGenerator]:
    """Generators with a uniformly scaled normal (r, conj(u))."""
    normals = arrays(np.float64, (tag.hopf_dim,), elements=coefficients).filter(
        lambda w: float(np.linalg.norm(w)) >= 1e-2
    )
    return normals.map(lambda w: SpinGenerator.from_normal(tag, w / np.linalg.norm(w)))


@st.composite
def element_pairs(draw: st.DrawFn) -> tuple[AlgebraElement, AlgebraElement]:
    tag = draw(tags)
    return draw(elements(tag)), draw(elements(tag))


@st.composite
def element_triples(draw: st.DrawFn) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    tag = draw(tags)
    return draw(elements(tag)), draw(elements(tag)), draw(elements(tag))
