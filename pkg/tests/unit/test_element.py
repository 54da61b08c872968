"""
Tests for algebra elements and the batched kernels.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyhopf.algebra import kernels
from polyhopf.algebra.element import (
    AlgebraElement,
    AlgebraTag,
    conj,
    imag_part,
    inner,
    inverse,
    mul,
    norm,
    norm_sq,
    real_part,
)
from polyhopf.utils.errors import AlgebraMismatchError, InvalidElementError, NonInvertibleError
from tests.strategies import element_pairs, element_triples, elements, nonzero_elements

O = AlgebraTag.OCTONION
REL = 1e-12


def close(a: AlgebraElement, b: AlgebraElement, scale: float) -> bool:
    return float(np.linalg.norm(a.coeffs - b.coeffs)) <= REL * max(scale, 1.0)


class TestAlgebraTag:
    @pytest.mark.parametrize(
        ("symbol", "dim", "hopf_dim"), [("R", 1, 2), ("C", 2, 3), ("H", 4, 5), ("O", 8, 9)]
    )
    def test_dimensions(self, symbol, dim, hopf_dim):
        tag = AlgebraTag.from_symbol(symbol)
        assert tag.dim == dim
        assert tag.hopf_dim == hopf_dim
        assert AlgebraTag.from_hopf_dim(hopf_dim) is tag
        assert str(tag) == symbol

    def test_lowercase_symbol(self):
        assert AlgebraTag.from_symbol("o") is O

    def test_unknown_symbol(self):
        with pytest.raises(ValueError, match="Unknown algebra"):
            AlgebraTag.from_symbol("S")

    def test_quaternion_labels(self):
        assert AlgebraTag.QUATERNION.labels == (0, 1, 2, 4)

    def test_only_octonions_are_non_associative(self):
        assert [tag.associative for tag in AlgebraTag] == [True, True, True, False]


class TestConstruction:
    def test_wrong_length_rejected(self):
        with pytest.raises(InvalidElementError, match="Expected 4 coefficients"):
            AlgebraElement(AlgebraTag.QUATERNION, [1.0, 2.0])

    def test_non_finite_rejected(self):
        with pytest.raises(InvalidElementError, match="finite"):
            AlgebraElement(AlgebraTag.COMPLEX, [np.nan, 0.0])

    def test_coefficients_are_read_only(self):
        a = AlgebraElement.one(O)
        with pytest.raises(ValueError):
            a.coeffs[0] = 2.0

    def test_basis_outside_algebra(self):
        with pytest.raises(InvalidElementError, match="e3"):
            AlgebraElement.basis(AlgebraTag.QUATERNION, 3)

    def test_from_labels(self):
        a = AlgebraElement.from_labels(AlgebraTag.QUATERNION, {0: 1.0, 4: -2.0})
        np.testing.assert_array_equal(a.coeffs, [1.0, 0.0, 0.0, -2.0])

    def test_repr(self):
        a = AlgebraElement.from_labels(O, {0: 1.5, 7: -2.0})
        assert repr(a) == "O(1.5 - 2e7)"
        assert repr(AlgebraElement.zero(O)) == "O(0)"

    def test_mixed_algebras_rejected(self):
        with pytest.raises(AlgebraMismatchError):
            AlgebraElement.one(O) + AlgebraElement.one(AlgebraTag.QUATERNION)
        with pytest.raises(AlgebraMismatchError):
            mul(AlgebraElement.one(O), AlgebraElement.one(AlgebraTag.COMPLEX))


class TestBasicOperations:
    def test_real_and_imaginary_parts(self):
        a = AlgebraElement.from_labels(O, {0: 3.0, 5: 4.0})
        assert real_part(a) == 3.0
        assert imag_part(a) == AlgebraElement.from_labels(O, {5: 4.0})
        assert norm(a) == 5.0
        assert norm_sq(a) == 25.0

    def test_conjugate_negates_imaginary_part(self):
        a = AlgebraElement.from_labels(O, {0: 1.0, 3: 2.0})
        assert conj(a) == AlgebraElement.from_labels(O, {0: 1.0, 3: -2.0})

    def test_inverse_of_zero(self):
        with pytest.raises(NonInvertibleError):
            inverse(AlgebraElement.zero(O))

    def test_scalar_multiplication(self):
        a = AlgebraElement.one(AlgebraTag.COMPLEX)
        assert 2.0 * a == a * 2.0 == AlgebraElement.real(AlgebraTag.COMPLEX, 2.0)
        assert a / 2.0 == AlgebraElement.real(AlgebraTag.COMPLEX, 0.5)

    def test_complex_product(self):
        i = AlgebraElement.basis(AlgebraTag.COMPLEX, 1)
        assert i * i == AlgebraElement.real(AlgebraTag.COMPLEX, -1.0)

    def test_quaternion_product(self):
        H = AlgebraTag.QUATERNION
        i, j, k = (AlgebraElement.basis(H, label) for label in (1, 2, 4))
        assert i * j == k
        assert j * k == i
        assert k * i == j


class TestNormedAlgebraLaws:
    """Identities shared by R, C, H and O."""

    @given(element_pairs())
    def test_composition_law(self, pair):
        a, b = pair
        assert abs(norm(a * b) - norm(a) * norm(b)) <= REL * max(norm(a) * norm(b), 1.0)

    @given(element_pairs())
    def test_conjugation_reverses_products(self, pair):
        a, b = pair
        assert close(conj(a * b), conj(b) * conj(a), norm(a) * norm(b))

    @given(element_triples())
    def test_inner_product_scaling(self, triple):
        a, x, y = triple
        scale = norm_sq(a) * norm(x) * norm(y)
        assert abs(inner(a * x, a * y) - norm_sq(a) * inner(x, y)) <= REL * max(scale, 1.0)

    @given(st.sampled_from(list(AlgebraTag)).flatmap(nonzero_elements))
    def test_inverse(self, a):
        one = AlgebraElement.one(a.tag)
        assert close(a * inverse(a), one, 1.0)
        assert close(inverse(a) * a, one, 1.0)

    @given(st.sampled_from(list(AlgebraTag)).flatmap(elements))
    def test_rank_equation(self, a):
        # a^2 - 2 Re(a) a + |a|^2 = 0
        lhs = a * a - a * (2.0 * real_part(a)) + AlgebraElement.real(a.tag, norm_sq(a))
        assert close(lhs, AlgebraElement.zero(a.tag), norm_sq(a))


class TestOctonionLaws:
    """Alternative and Moufang laws, which hold although O is not associative."""

    @given(elements(O), elements(O))
    def test_alternative_laws(self, x, y):
        scale = norm_sq(x) * norm(y)
        assert close((x * x) * y, x * (x * y), scale)
        assert close((y * x) * x, y * (x * x), scale)
        assert close((x * y) * x, x * (y * x), scale)

    @given(elements(O), elements(O), elements(O))
    @settings(max_examples=50)
    def test_moufang_identities(self, x, y, z):
        scale = norm_sq(x) * norm(y) * norm(z)
        assert close(((x * y) * z) * y, x * (y * (z * y)), norm(x) * norm_sq(y) * norm(z))
        assert close(x * (y * (x * z)), ((x * y) * x) * z, scale)
        assert close((x * y) * (z * x), (x * (y * z)) * x, scale)

    def test_associator_nonzero_for_basis(self):
        e1, e2, e3 = (AlgebraElement.basis(O, label) for label in (1, 2, 3))
        assert (e1 * e2) * e3 != e1 * (e2 * e3)


class TestKernels:
    """Batched kernels agree with the element-level operations."""

    def test_batched_product(self, rng):
        a = rng.standard_normal((5, 3, 8))
        b = rng.standard_normal((5, 3, 8))
        batched = kernels.mul_coeffs(a, b)
        single = (AlgebraElement(O, a[2, 1]) * AlgebraElement(O, b[2, 1])).coeffs
        np.testing.assert_allclose(batched[2, 1], single, rtol=0, atol=1e-13)

    def test_broadcasting(self, rng):
        a = rng.standard_normal((4, 4))
        c = rng.standard_normal(4)
        np.testing.assert_allclose(
            kernels.mul_coeffs(a, c), kernels.mul_coeffs(a, np.tile(c, (4, 1))), atol=1e-14
        )

    def test_structure_tensor_is_read_only(self):
        with pytest.raises(ValueError):
            kernels.structure_tensor(8)[0, 0] = 2.0

    def test_inverse_coeffs(self, rng):
        a = rng.standard_normal((6, 4))
        product = kernels.mul_coeffs(a, kernels.inverse_coeffs(a))
        np.testing.assert_allclose(product, np.tile(kernels.unit_coeffs(4), (6, 1)), atol=1e-14)
