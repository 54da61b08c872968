"""
Tests for rotations, SU(2, F), spin generators and words.

Tests verify:
1. Rotation validates orthogonality, determinant and size
2. Phi(A v) = Ad_A(Phi(v)) and Ad is a 2-to-1 homomorphism onto SO(1 + d)
3. Generators are involutions whose induced maps are rotations, equivariant with Phi
4. The word g(0, 1) g(0, -1) acts as -Id on spinors and trivially on R^9
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.hopf.maps import hopf_phi
from polyhopf.hopf.types import Spinor
from polyhopf.spin.generators import (
    GeneratorWord,
    SpinGenerator,
    generator_apply,
    generator_matrix,
    generator_rotation,
    random_generator,
    random_word,
    word_apply,
    word_matrix,
    word_rotation,
)
from polyhopf.spin.rotation import Rotation, random_rotation
from polyhopf.spin.unitary import (
    SpecialUnitary2,
    adjoint_rotation,
    quaternion_complexify,
    su2_apply,
    su2_random,
)
from polyhopf.utils.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    InvalidElementError,
    InvalidRotationError,
    UnsupportedAlgebraError,
)
from tests.strategies import generators, spinors

O = AlgebraTag.OCTONION
H = AlgebraTag.QUATERNION


def image_vector(v: Spinor) -> np.ndarray:
    return hopf_phi(v).to_vector()


def random_spinor(tag: AlgebraTag, rng: np.random.Generator) -> Spinor:
    return Spinor.from_coeffs(tag, rng.standard_normal((2, tag.dim)))


class TestRotation:
    def test_identity(self):
        assert Rotation.identity(9).n == 9
        np.testing.assert_array_equal(Rotation.identity(3).apply([1.0, 2.0, 3.0]), [1, 2, 3])

    def test_reflection_rejected(self):
        with pytest.raises(InvalidRotationError) as info:
            Rotation(np.diag([1.0, 1.0, -1.0]))
        assert info.value.check == "determinant"

    def test_non_orthogonal_rejected(self):
        with pytest.raises(InvalidRotationError) as info:
            Rotation(np.diag([2.0, 0.5, 1.0]))
        assert info.value.check == "orthogonality"

    def test_unsupported_size(self):
        with pytest.raises(DimensionMismatchError):
            Rotation(np.eye(4))

    def test_apply_checks_length(self):
        with pytest.raises(DimensionMismatchError):
            Rotation.identity(5).apply(np.zeros(3))

    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_random_rotation_is_deterministic(self, n):
        first, second = random_rotation(n, 11), random_rotation(n, 11)
        np.testing.assert_array_equal(first.matrix, second.matrix)
        assert abs(np.linalg.det(first.matrix) - 1.0) < 1e-12

    def test_composition(self, rng):
        a, b = random_rotation(9, rng), random_rotation(9, rng)
        np.testing.assert_allclose((a @ b).matrix, a.matrix @ b.matrix)
        assert a.distance(a) == 0.0


class TestSpecialUnitary:
    def test_random_elements_are_valid(self, associative_tag, rng):
        A = su2_random(associative_tag, rng)
        assert A.tag is associative_tag
        identity = A @ A.adjoint()
        np.testing.assert_allclose(
            identity.entries, SpecialUnitary2.identity(associative_tag).entries, atol=1e-12
        )

    def test_octonions_rejected(self, rng):
        with pytest.raises(UnsupportedAlgebraError):
            su2_random(O, rng)
        with pytest.raises(UnsupportedAlgebraError):
            su2_apply(SpecialUnitary2.identity(H), random_spinor(O, rng))

    def test_non_unitary_rejected(self):
        entries = SpecialUnitary2.identity(AlgebraTag.COMPLEX).entries * 2.0
        with pytest.raises(InvalidRotationError, match="unitarity"):
            SpecialUnitary2(AlgebraTag.COMPLEX, entries)

    def test_complex_determinant_checked(self):
        # diag(i, i) is unitary with determinant -1
        entries = np.zeros((2, 2, 2))
        entries[0, 0, 1] = entries[1, 1, 1] = 1.0
        with pytest.raises(InvalidRotationError, match="determinant"):
            SpecialUnitary2(AlgebraTag.COMPLEX, entries)

    def test_equivariance(self, associative_tag, rng):
        for _ in range(20):
            A = su2_random(associative_tag, rng)
            v = random_spinor(associative_tag, rng)
            rotated = adjoint_rotation(A).apply(image_vector(v))
            np.testing.assert_allclose(image_vector(su2_apply(A, v)), rotated, atol=1e-12)

    def test_adjoint_is_homomorphism(self, associative_tag, rng):
        A, B = su2_random(associative_tag, rng), su2_random(associative_tag, rng)
        product = adjoint_rotation(A @ B)
        assert product.distance(adjoint_rotation(A) @ adjoint_rotation(B)) < 1e-12

    def test_adjoint_kernel(self, associative_tag, rng):
        A = su2_random(associative_tag, rng)
        assert adjoint_rotation(-A).distance(adjoint_rotation(A)) < 1e-14

    def test_mixed_algebras(self, rng):
        with pytest.raises(AlgebraMismatchError):
            su2_apply(su2_random(H, rng), random_spinor(AlgebraTag.COMPLEX, rng))


class TestQuaternionComplexify:
    def test_identity(self):
        np.testing.assert_array_equal(
            quaternion_complexify(SpecialUnitary2.identity(H)), np.eye(4)
        )

    def test_multiplicative_and_unitary(self, rng):
        A, B = su2_random(H, rng), su2_random(H, rng)
        image = quaternion_complexify(A @ B)
        np.testing.assert_allclose(
            image, quaternion_complexify(A) @ quaternion_complexify(B), atol=1e-12
        )
        np.testing.assert_allclose(image @ image.conj().T, np.eye(4), atol=1e-12)

    def test_trace_invariance(self, rng):
        A = su2_random(H, rng)
        X = np.zeros((2, 2, 4))
        X[0, 0, 0], X[1, 1, 0] = rng.standard_normal(2)
        X[0, 1] = rng.standard_normal(4)
        X[1, 0] = X[0, 1] * np.array([1.0, -1.0, -1.0, -1.0])
        conjugated = quaternion_complexify(A) @ quaternion_complexify(X)
        conjugated = conjugated @ quaternion_complexify(A).conj().T
        assert np.trace(conjugated) == pytest.approx(np.trace(quaternion_complexify(X)))

    def test_rejects_other_algebras(self):
        with pytest.raises(UnsupportedAlgebraError):
            quaternion_complexify(np.zeros((2, 2, 2)))


class TestSpinGenerator:
    def test_requires_unit_normal(self):
        with pytest.raises(InvalidElementError):
            SpinGenerator(1.0, AlgebraElement.one(O))

    def test_normal_round_trip(self, tag, rng):
        w = rng.standard_normal(tag.hopf_dim)
        w /= np.linalg.norm(w)
        np.testing.assert_allclose(SpinGenerator.from_normal(tag, w).normal(), w)

    def test_normal_length_checked(self):
        with pytest.raises(DimensionMismatchError):
            SpinGenerator.from_normal(O, np.ones(5) / np.sqrt(5.0))

    @given(st.data())
    @settings(max_examples=50)
    def test_involution(self, data):
        tag = data.draw(st.sampled_from(list(AlgebraTag)))
        g = data.draw(generators(tag))
        v = data.draw(spinors(tag))
        twice = generator_apply(g, generator_apply(g, v))
        assert twice.distance(v) <= 1e-12 * max(np.sqrt(v.norm_sq), 1.0)

    @given(generators(O), spinors(O))
    def test_octonion_equivariance(self, g, v):
        expected = generator_rotation(g).apply(image_vector(v))
        gap = np.linalg.norm(image_vector(generator_apply(g, v)) - expected)
        assert gap <= 1e-11 * max(v.norm_sq, 1.0)

    def test_rotation_is_symmetric(self, rng):
        g = random_generator(O, rng)
        matrix = generator_matrix(g)
        np.testing.assert_array_equal(matrix, matrix.T)
        assert abs(np.linalg.det(matrix) - 1.0) < 1e-12

    def test_reflection_property(self, rng):
        g = random_generator(O, rng)
        w = g.normal()
        np.testing.assert_allclose(generator_rotation(g).apply(w), w, atol=1e-15)

    def test_real_generators_are_not_rotations(self, rng):
        with pytest.raises(InvalidRotationError):
            generator_rotation(random_generator(AlgebraTag.REAL, rng))


class TestGeneratorWord:
    def test_spin_kernel(self, rng):
        word = GeneratorWord(
            O,
            (
                SpinGenerator(0.0, AlgebraElement.one(O)),
                SpinGenerator(0.0, -AlgebraElement.one(O)),
            ),
        )
        np.testing.assert_array_equal(word_matrix(word), np.eye(9))
        v = random_spinor(O, rng)
        assert word_apply(word, v).isclose(-v, tol=0.0)

    def test_empty_word_is_identity(self, rng):
        word = GeneratorWord(O)
        v = random_spinor(O, rng)
        assert word_apply(word, v).isclose(v, tol=0.0)
        np.testing.assert_array_equal(word_rotation(word).matrix, np.eye(9))

    def test_words_act_right_to_left(self, rng):
        g, h = random_generator(O, rng), random_generator(O, rng)
        v = random_spinor(O, rng)
        expected = generator_apply(g, generator_apply(h, v))
        assert word_apply(GeneratorWord.of([g, h]), v).isclose(expected, tol=0.0)

    def test_word_equivariance(self, tag, rng):
        if tag is AlgebraTag.REAL:
            word = random_word(tag, 4, rng)
        else:
            word = random_word(tag, 5, rng)
        v = random_spinor(tag, rng)
        expected = word_rotation(word).apply(image_vector(v))
        np.testing.assert_allclose(image_vector(word_apply(word, v)), expected, atol=1e-11)

    def test_concatenation_is_homomorphism(self, rng):
        a, b = random_word(O, 3, rng), random_word(O, 2, rng)
        joined = a + b
        assert len(joined) == 5
        assert word_rotation(joined).distance(word_rotation(a) @ word_rotation(b)) < 1e-12

    def test_mixed_algebras(self, rng):
        with pytest.raises(AlgebraMismatchError):
            random_word(O, 1, rng) + random_word(H, 1, rng)
        with pytest.raises(AlgebraMismatchError):
            GeneratorWord(O, (random_generator(H, rng),))

    def test_empty_of(self):
        with pytest.raises(ValueError, match="empty word"):
            GeneratorWord.of([])

    def test_random_word_is_deterministic(self):
        first, second = random_word(O, 4, 99), random_word(O, 4, 99)
        np.testing.assert_array_equal(word_matrix(first), word_matrix(second))


def basis(tag: AlgebraTag, label: int) -> AlgebraElement:
    return AlgebraElement.from_labels(tag, {label: 1.0})


class TestGeneratorExamples:
    """g(r, u) acts by (x, y) -> (r x + conj(u) y, u x - r y)."""

    def test_g_1_0_negates_second_coordinate(self, rng):
        v = random_spinor(O, rng)
        moved = generator_apply(SpinGenerator(1.0, AlgebraElement.zero(O)), v)
        assert moved.x == v.x
        assert moved.y == -v.y

    def test_g_0_1_swaps_coordinates(self, rng):
        v = random_spinor(O, rng)
        moved = generator_apply(SpinGenerator(0.0, AlgebraElement.one(O)), v)
        assert moved.x == v.y
        assert moved.y == v.x

    def test_g_0_e1_on_e2(self):
        v = Spinor(basis(O, 2), AlgebraElement.zero(O))
        moved = generator_apply(SpinGenerator(0.0, basis(O, 1)), v)
        assert moved.x == AlgebraElement.zero(O)
        assert moved.y == basis(O, 4)

    def test_rotation_of_g_1_0(self):
        matrix = generator_rotation(SpinGenerator(1.0, AlgebraElement.zero(O))).matrix
        np.testing.assert_array_equal(matrix, np.diag([1.0] + [-1.0] * 8))

    def test_rotation_of_g_0_1(self):
        # (x, y) -> (y, x) sends lambda to -lambda and alpha to conj(alpha)
        matrix = generator_rotation(SpinGenerator(0.0, AlgebraElement.one(O))).matrix
        np.testing.assert_array_equal(matrix, np.diag([-1.0, 1.0] + [-1.0] * 7))


class TestSu2Examples:
    def test_quarter_turn(self):
        # ((0, -1), (1, 0)) (1, i) = (-i, 1)
        C = AlgebraTag.COMPLEX
        zero, one, i = AlgebraElement.zero(C), AlgebraElement.one(C), basis(C, 1)
        A = SpecialUnitary2.from_elements(((zero, -one), (one, zero)))
        moved = su2_apply(A, Spinor(one, i))
        assert moved.x == -i
        assert moved.y == one

    def test_quarter_turn_over_quaternions(self, rng):
        zero, one = AlgebraElement.zero(H), AlgebraElement.one(H)
        A = SpecialUnitary2.from_elements(((zero, -one), (one, zero)))
        v = random_spinor(H, rng)
        moved = su2_apply(A, v)
        assert moved.x == -v.y
        assert moved.y == v.x

    def test_random_is_deterministic(self, associative_tag):
        first = su2_random(associative_tag, 7)
        second = su2_random(associative_tag, 7)
        np.testing.assert_array_equal(first.entries, second.entries)

    def test_distinct_seeds_differ(self, associative_tag):
        first = su2_random(associative_tag, 7)
        second = su2_random(associative_tag, 8)
        assert not np.array_equal(first.entries, second.entries)
