"""
Tests for Stiefel frames, the polygon pipeline, quotient invariants and frame actions.

Tests verify:
1. phi_k sends frames to closed polygons of perimeter 1
2. lift inverts phi_k for any fiber parameters, including polygons with zero edges
3. Gram matrices and orientation separate the SO(n) and O(n) classes
4. Fiber elements, SU(2, F) and generator words keep the polygon class
"""

import numpy as np
import pytest

from polyhopf.algebra.element import AlgebraTag
from polyhopf.hopf.types import UnitElement
from polyhopf.polygons.actions import fiber_act_frame, su2_apply_frame, word_apply_frame
from polyhopf.polygons.pipeline import fiber_rank, lift, normalize, phi_k, rotate_polygon
from polyhopf.polygons.quotient import (
    equivalent_mod_O,
    equivalent_mod_SO,
    gram_deviation,
    quotient_invariant,
)
from polyhopf.polygons.sampling import sample_stiefel
from polyhopf.polygons.types import PolygonConfig, StiefelFrame, frame_residuals
from polyhopf.spin.generators import random_word, word_rotation
from polyhopf.spin.rotation import random_rotation
from polyhopf.spin.unitary import adjoint_rotation, su2_random
from polyhopf.utils.errors import (
    AlgebraMismatchError,
    DegeneratePolygonError,
    DimensionMismatchError,
    FrameInvariantError,
    PolygonClosureError,
    UnsupportedAlgebraError,
)

O = AlgebraTag.OCTONION
EDGE_COUNTS = (3, 4, 8, 16, 64)

# The square in the plane, edge length 1/4
SQUARE = np.array([[0.25, 0.0], [0.0, 0.25], [-0.25, 0.0], [0.0, -0.25]])


def units(tag: AlgebraTag, k: int, rng: np.random.Generator) -> list[UnitElement]:
    return [UnitElement.random(tag, rng) for _ in range(k)]


class TestStiefelFrame:
    def test_invariants_checked(self, rng):
        columns = rng.standard_normal((4, 2, 8))
        with pytest.raises(FrameInvariantError) as info:
            StiefelFrame(O, columns)
        assert info.value.sum_name == "sum |x_i|^2 = 1"

    def test_orthogonality_sum_named(self):
        # x = y: both rows have norm 1 but are not orthogonal
        columns = np.zeros((4, 2, 2))
        columns[:, 0, 0] = columns[:, 1, 0] = 0.5
        with pytest.raises(FrameInvariantError) as info:
            StiefelFrame(AlgebraTag.COMPLEX, columns)
        assert info.value.sum_name == "sum x_i conj(y_i) = 0"

    def test_shape_checked(self):
        with pytest.raises(DimensionMismatchError):
            StiefelFrame(O, np.zeros((4, 2, 4)))

    def test_too_few_columns(self):
        with pytest.raises(DimensionMismatchError):
            StiefelFrame(AlgebraTag.REAL, np.array([[[1.0], [0.0]], [[0.0], [1.0]]]))

    def test_columns_round_trip_through_spinors(self, rng):
        frame = sample_stiefel(O, 5, rng)
        rebuilt = StiefelFrame.from_spinors([frame.column(i) for i in range(frame.k)])
        assert rebuilt.distance(frame) == 0.0


class TestPolygonConfig:
    def test_square(self):
        square = PolygonConfig(SQUARE)
        assert (square.k, square.n) == (4, 2)
        assert square.tag is AlgebraTag.REAL
        assert square.perimeter == 1.0
        assert square.closure_residual == 0.0

    def test_open_polygon_rejected(self):
        edges = SQUARE.copy()
        edges[0, 0] += 1e-6
        edges[2, 0] -= 1e-6 / 3
        with pytest.raises(PolygonClosureError) as info:
            PolygonConfig(edges)
        assert info.value.quantity == "closure"

    def test_perimeter_checked(self):
        with pytest.raises(PolygonClosureError) as info:
            PolygonConfig(SQUARE * 2.0)
        assert info.value.quantity == "perimeter"

    def test_zero_polygon(self):
        with pytest.raises(DegeneratePolygonError):
            PolygonConfig(np.zeros((4, 3)))

    def test_unsupported_dimension(self):
        with pytest.raises(DimensionMismatchError):
            PolygonConfig(np.zeros((4, 4)))

    def test_normalize(self):
        square = normalize(SQUARE * 8.0)
        np.testing.assert_allclose(square.edges, SQUARE)

    def test_normalize_rejects_open_polygons(self):
        with pytest.raises(PolygonClosureError):
            normalize([[1.0, 0.0], [0.0, 1.0], [0.0, 1.0]])

    def test_normalize_zero(self):
        with pytest.raises(DegeneratePolygonError):
            normalize(np.zeros((3, 2)))


class TestPipeline:
    @pytest.mark.parametrize("k", EDGE_COUNTS)
    def test_closed_unit_perimeter(self, tag, k, rng):
        for _ in range(5):
            polygon = phi_k(sample_stiefel(tag, k, rng))
            assert polygon.closure_residual <= 1e-10
            assert abs(polygon.perimeter - 1.0) <= 1e-10
            assert polygon.n == tag.hopf_dim

    @pytest.mark.parametrize("k", EDGE_COUNTS)
    def test_lift_round_trip(self, tag, k, rng):
        polygon = phi_k(sample_stiefel(tag, k, rng))
        for thetas in (None, units(tag, k, rng)):
            lifted = lift(polygon, thetas)
            assert np.max(np.abs(phi_k(lifted).edges - polygon.edges)) <= 1e-9

    def test_lift_parameter_count(self, rng):
        polygon = phi_k(sample_stiefel(O, 4, rng))
        with pytest.raises(DimensionMismatchError):
            lift(polygon, units(O, 3, rng))

    def test_lift_parameter_algebra(self, rng):
        polygon = phi_k(sample_stiefel(O, 4, rng))
        with pytest.raises(AlgebraMismatchError):
            lift(polygon, units(AlgebraTag.QUATERNION, 4, rng))

    def test_phi_k_with_tolerance(self, rng):
        frame = sample_stiefel(AlgebraTag.COMPLEX, 6, rng)
        assert phi_k(frame, tol=1e-6).k == 6

    def test_square_lifts(self):
        frame = lift(PolygonConfig(SQUARE))
        np.testing.assert_allclose(phi_k(frame).edges, SQUARE, atol=1e-15)

    def test_polygon_at_the_tolerance_lifts(self):
        # closure and perimeter are both 0.9 polygon_tol off; the raw preimage sums are 1.8 off
        edges = SQUARE.copy()
        edges[0, 0] += 0.9e-10
        polygon = PolygonConfig(edges)
        frame = lift(polygon)
        assert max(frame_residuals(frame.columns).values()) <= 1e-14
        np.testing.assert_allclose(phi_k(frame).edges, edges, atol=1e-9)

    def test_tolerance_edge_polygon_lifts_in_every_algebra(self, tag, rng):
        polygon = phi_k(sample_stiefel(tag, 6, rng))
        edges = polygon.edges.copy()
        edges[0] *= 1.0 + 0.9e-10 / np.linalg.norm(edges[0])
        frame = lift(PolygonConfig(edges), units(tag, 6, rng))
        assert max(frame_residuals(frame.columns).values()) <= 1e-14

    def test_rotate_checks_dimension(self, rng):
        with pytest.raises(DimensionMismatchError):
            rotate_polygon(random_rotation(3, rng), PolygonConfig(SQUARE))


class TestDegeneratePolygons:
    """Polygons with zero edges have smaller fibers."""

    def degenerate(self, rng: np.random.Generator) -> PolygonConfig:
        base = phi_k(sample_stiefel(O, 5, rng)).edges
        edges = np.zeros((7, 9))
        edges[[0, 1, 3, 4, 6]] = base
        return PolygonConfig(edges)

    def test_fiber_rank(self, rng):
        assert fiber_rank(self.degenerate(rng)) == 5
        assert fiber_rank(PolygonConfig(SQUARE)) == 4

    def test_zero_edges_lift_to_zero_columns(self, rng):
        polygon = self.degenerate(rng)
        frame = lift(polygon, units(O, 7, rng))
        np.testing.assert_array_equal(frame.columns[[2, 5]], 0.0)
        assert np.max(np.abs(phi_k(frame).edges - polygon.edges)) <= 1e-9


class TestQuotient:
    def test_rotation_keeps_class(self, tag, rng):
        p = phi_k(sample_stiefel(tag, tag.hopf_dim + 2, rng))
        q = rotate_polygon(random_rotation(tag.hopf_dim, rng), p)
        assert gram_deviation(p, q) <= 1e-12
        assert equivalent_mod_SO(p, q)
        assert equivalent_mod_O(p, q)

    def test_mirror_changes_orientation(self, tag, rng):
        p = phi_k(sample_stiefel(tag, tag.hopf_dim + 2, rng))
        mirror = np.ones(tag.hopf_dim)
        mirror[0] = -1.0
        q = PolygonConfig(p.edges * mirror)
        assert equivalent_mod_O(p, q)
        assert not equivalent_mod_SO(p, q)
        assert quotient_invariant(p).orientation == -quotient_invariant(q).orientation

    def test_planar_square_has_no_orientation_in_space(self):
        edges = np.zeros((4, 3))
        edges[:, :2] = SQUARE
        invariant = quotient_invariant(PolygonConfig(edges))
        assert invariant.rank == 2
        assert invariant.orientation is None

    def test_full_rank_orientation(self):
        invariant = quotient_invariant(PolygonConfig(SQUARE))
        assert invariant.rank == 2
        assert invariant.orientation == 1
        np.testing.assert_allclose(invariant.gram, SQUARE @ SQUARE.T)

    def test_different_polygons(self, rng):
        p = phi_k(sample_stiefel(O, 6, rng))
        q = phi_k(sample_stiefel(O, 6, rng))
        assert not equivalent_mod_O(p, q)

    def test_shapes_must_match(self, rng):
        with pytest.raises(DimensionMismatchError):
            gram_deviation(phi_k(sample_stiefel(O, 6, rng)), phi_k(sample_stiefel(O, 5, rng)))


class TestFrameActions:
    def test_fiber_action_keeps_polygon(self, tag, rng):
        frame = sample_stiefel(tag, 8, rng)
        moved = fiber_act_frame(frame, units(tag, 8, rng))
        assert np.max(np.abs(phi_k(moved).edges - phi_k(frame).edges)) <= 1e-12
        assert max(frame_residuals(moved.columns).values()) <= 1e-12

    def test_fiber_action_count(self, rng):
        with pytest.raises(DimensionMismatchError):
            fiber_act_frame(sample_stiefel(O, 4, rng), units(O, 3, rng))

    def test_su2_action_rotates_polygon(self, associative_tag, rng):
        frame = sample_stiefel(associative_tag, 8, rng)
        A = su2_random(associative_tag, rng)
        expected = rotate_polygon(adjoint_rotation(A), phi_k(frame))
        moved = phi_k(su2_apply_frame(A, frame))
        assert np.max(np.abs(moved.edges - expected.edges)) <= 1e-12

    def test_su2_rejects_octonion_frames(self, rng):
        A = su2_random(AlgebraTag.QUATERNION, rng)
        with pytest.raises(UnsupportedAlgebraError):
            su2_apply_frame(A, sample_stiefel(O, 4, rng))

    def test_word_action_rotates_polygon(self, rng):
        frame = sample_stiefel(O, 8, rng)
        word = random_word(O, 6, rng)
        expected = rotate_polygon(word_rotation(word), phi_k(frame))
        moved = phi_k(word_apply_frame(word, frame))
        assert np.max(np.abs(moved.edges - expected.edges)) <= 1e-12
        assert equivalent_mod_SO(phi_k(frame), moved)

    def test_word_algebra_must_match(self, rng):
        with pytest.raises(AlgebraMismatchError):
            word_apply_frame(random_word(AlgebraTag.QUATERNION, 2, rng), sample_stiefel(O, 4, rng))
