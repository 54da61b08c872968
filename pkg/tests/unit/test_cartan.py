"""
Tests for the constructive Cartan-Dieudonne decomposition.

Tests verify:
1. Rotations factor into an even number of at most n reflections, reflections into an odd one
2. Columns already close to e_j do not spoil the count or the product
3. Generator words and SU(2, F) elements rebuilt from rotations induce them again
"""

import numpy as np
import pytest

from polyhopf.algebra.element import AlgebraTag
from polyhopf.spin.cartan import reflection_normals, unitary_from_rotation, word_from_rotation
from polyhopf.spin.generators import word_rotation
from polyhopf.spin.rotation import Rotation, random_rotation
from polyhopf.spin.unitary import adjoint_rotation
from polyhopf.utils.errors import DimensionMismatchError, UnsupportedAlgebraError
from polyhopf.verification import run_verification

O = AlgebraTag.OCTONION


def householder(w: np.ndarray) -> np.ndarray:
    return np.eye(w.shape[0]) - 2.0 * np.outer(w, w)


class TestReflectionNormals:
    def test_identity_needs_no_reflections(self):
        assert reflection_normals(np.eye(9)) == []

    def test_product_of_reflections(self, rng):
        R = random_rotation(9, rng).matrix
        normals = reflection_normals(R)
        product = np.eye(9)
        for w in normals:
            product = product @ householder(w)
        np.testing.assert_allclose(product, R, atol=1e-12)
        for w in normals:
            assert np.linalg.norm(w) == pytest.approx(1.0)

    @pytest.mark.parametrize("n", [2, 3, 5, 9])
    def test_rotations_need_an_even_number(self, n, rng):
        for _ in range(10):
            count = len(reflection_normals(random_rotation(n, rng).matrix))
            assert count % 2 == 0
            assert count <= n


class TestWordFromRotation:
    def test_reconstruction(self, rng):
        # 100 random elements of SO(9)
        for _ in range(100):
            R = random_rotation(9, rng)
            word = word_from_rotation(R)
            assert len(word) <= 8
            assert word_rotation(word).distance(R) <= 1e-8

    @pytest.mark.parametrize(
        "tag", [AlgebraTag.REAL, AlgebraTag.COMPLEX, AlgebraTag.QUATERNION], ids=str
    )
    def test_other_algebras(self, tag, rng):
        R = random_rotation(tag.hopf_dim, rng)
        assert word_rotation(word_from_rotation(R, tag)).distance(R) <= 1e-8

    def test_size_must_match(self, rng):
        with pytest.raises(DimensionMismatchError):
            word_from_rotation(random_rotation(5, rng), O)


class TestUnitaryFromRotation:
    def test_adjoint_reproduces_rotation(self, associative_tag, rng):
        R = random_rotation(associative_tag.hopf_dim, rng)
        A = unitary_from_rotation(R, associative_tag)
        assert adjoint_rotation(A).distance(R) <= 1e-8

    def test_identity(self):
        A = unitary_from_rotation(Rotation.identity(5), AlgebraTag.QUATERNION)
        np.testing.assert_array_equal(A.entries[0, 0], [1.0, 0.0, 0.0, 0.0])

    def test_octonions_rejected(self, rng):
        with pytest.raises(UnsupportedAlgebraError):
            unitary_from_rotation(random_rotation(9, rng), O)


class TestNearlyFixedColumns:
    """Rotations whose second column is already close to e_2 after the first reflection."""

    @staticmethod
    def nearly_fixed(angle: float) -> np.ndarray:
        u = np.array([1.0, 2.0, 3.0]) / np.sqrt(14.0)
        c, s = np.cos(angle), np.sin(angle)
        flip = np.array([[1.0, 0.0, 0.0], [0.0, c, s], [0.0, s, -c]])
        return householder(u) @ flip

    @pytest.mark.parametrize("angle", [1e-4, 1e-6, 1e-8, 1e-10, 1e-13])
    def test_even_count_and_exact_product(self, angle):
        R = self.nearly_fixed(angle)
        assert np.linalg.det(R) == pytest.approx(1.0)
        normals = reflection_normals(R)
        assert len(normals) % 2 == 0
        assert len(normals) <= 3
        product = np.eye(3)
        for w in normals:
            product = product @ householder(w)
        np.testing.assert_allclose(product, R, atol=1e-14)

    @pytest.mark.parametrize("angle", [1e-4, 1e-8, 1e-12])
    def test_word_reproduces_rotation(self, angle):
        R = Rotation(self.nearly_fixed(angle))
        word = word_from_rotation(R, AlgebraTag.COMPLEX)
        assert word_rotation(word).distance(R) <= 1e-12
        A = unitary_from_rotation(R, AlgebraTag.COMPLEX)
        assert adjoint_rotation(A).distance(R) <= 1e-12

    def test_reflection_needs_odd_count(self, rng):
        u = rng.standard_normal(9)
        u /= np.linalg.norm(u)
        assert len(reflection_normals(householder(u))) % 2 == 1


class TestReconstructionAtScale:
    @pytest.mark.slow
    @pytest.mark.parametrize("seed", [0, 5])
    def test_thousand_trials(self, seed):
        report = run_verification("spin", trials=1000, seed=seed)
        results = {result.name: result for result in report.properties}
        for name in ("cartan_reconstruction", "unitary_reconstruction"):
            assert results[name].passed, results[name].max_residual
