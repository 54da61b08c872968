"""
Polygon suite: closure of sampled polygons, lifts, group invariance and equivalence witnesses.

Polygon checks work on whole frames rather than batched coefficient arrays, so each trial is a
Python-level pipeline run; their trial counts are a fraction of the requested count.
"""

import numpy as np

from polyhopf.algebra.element import AlgebraTag
from polyhopf.hopf.maps import fiber_witness, hopf_vectors
from polyhopf.hopf.types import UnitElement
from polyhopf.polygons.actions import fiber_act_frame, su2_apply_frame, word_apply_frame
from polyhopf.polygons.pipeline import fiber_rank, lift, phi_k, rotate_polygon
from polyhopf.polygons.quotient import (
    equivalent_mod_O,
    equivalent_mod_SO,
    gram_deviation,
    quotient_invariant,
)
from polyhopf.polygons.sampling import sample_stiefel
from polyhopf.polygons.types import PolygonConfig, StiefelFrame, frame_residuals
from polyhopf.polygons.witness import equivalence_witness
from polyhopf.spin.generators import random_word, word_rotation
from polyhopf.spin.rotation import Rotation, random_rotation
from polyhopf.spin.unitary import adjoint_rotation, su2_random
from polyhopf.verification.base import ALL_TAGS, PropertyCheck

SUITE = "polygon"
EDGE_COUNTS = (3, 4, 8, 16, 64)
MAX_WORD_LENGTH = 6


def _units(tag: AlgebraTag, count: int, rng: np.random.Generator) -> list[UnitElement]:
    return [UnitElement.random(tag, rng) for _ in range(count)]


def _random_action(
    frame: StiefelFrame, rng: np.random.Generator
) -> tuple[StiefelFrame, Rotation]:
    """
    Act on a frame by random fiber elements and a random group element.

    Returns the moved frame and the rotation the group element induces on R + F.
    """
    tag = frame.tag
    twisted = fiber_act_frame(frame, _units(tag, frame.k, rng))
    if tag is AlgebraTag.OCTONION:
        word = random_word(tag, int(rng.integers(0, MAX_WORD_LENGTH + 1)), rng)
        return word_apply_frame(word, twisted), word_rotation(word)
    A = su2_random(tag, rng)
    return su2_apply_frame(A, twisted), adjoint_rotation(A)


class PipelineClosure(PropertyCheck):
    """Sampled frames give closed polygons of perimeter 1 for every algebra and edge count."""

    name = "pipeline_closure"
    suite = SUITE
    tolerance_field = "polygon_tol"

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 10)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for k in EDGE_COUNTS:
                for _ in range(trials):
                    edges = hopf_vectors(sample_stiefel(tag, k, rng).columns)
                    closure = float(np.linalg.norm(edges.sum(axis=0)))
                    perimeter = float(np.linalg.norm(edges, axis=1).sum())
                    worst = max(worst, closure, abs(perimeter - 1.0))
        return worst


class StiefelOrthogonality(PropertyCheck):
    """The sampler's orthonormalization holds in every algebra, octonions included."""

    name = "stiefel_orthogonality"
    suite = SUITE
    tolerance_field = "frame_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for _ in range(trials):
                frame = sample_stiefel(tag, 8, rng)
                worst = max(worst, *frame_residuals(frame.columns).values())
        return worst


class LiftRoundTrip(PropertyCheck):
    """phi_k(lift(p, theta)) = p for random fiber parameters."""

    name = "lift_round_trip"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 20)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for k in EDGE_COUNTS:
                for _ in range(trials):
                    polygon = phi_k(sample_stiefel(tag, k, rng))
                    lifted = lift(polygon, _units(tag, k, rng))
                    worst = max(worst, float(np.max(np.abs(phi_k(lifted).edges - polygon.edges))))
        return worst


class DegenerateFiberCount(PropertyCheck):
    """
    A polygon with l nonzero edges has a fiber of l unit parameters.

    Zero edges lift to zero columns whatever their parameter, and two lifts differ by one fiber
    witness per nonzero edge.
    """

    name = "degenerate_fiber_count"
    suite = SUITE
    exact = True

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 20)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        mismatches = 0
        for tag in ALL_TAGS:
            for _ in range(trials):
                nonzero = int(rng.integers(3, 9))
                zeros = int(rng.integers(1, 4))
                base = phi_k(sample_stiefel(tag, nonzero, rng)).edges
                edges = np.zeros((nonzero + zeros, tag.hopf_dim))
                slots = np.sort(rng.choice(nonzero + zeros, size=nonzero, replace=False))
                edges[slots] = base
                polygon = PolygonConfig(edges)
                k = polygon.k

                first = lift(polygon, _units(tag, k, rng))
                second = lift(polygon, _units(tag, k, rng))
                zero_columns = np.setdiff1d(np.arange(k), slots)
                found = sum(1 for i in slots if _has_witness(first, second, int(i)))
                mismatches += abs(fiber_rank(polygon) - nonzero)
                mismatches += int(np.count_nonzero(first.columns[zero_columns]))
                mismatches += abs(found - nonzero)
        return float(mismatches)


def _has_witness(first: StiefelFrame, second: StiefelFrame, i: int) -> bool:
    return fiber_witness(first.column(i), second.column(i)) is not None


class GroupInvariance(PropertyCheck):
    """
    Fiber elements and group elements preserve the SO(n) class of phi_k(X).

    Over R, C and H the group element is a random A in SU(2, F); over the octonions it is a
    random generator word of length at most 6.
    """

    name = "group_invariance"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 5)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for _ in range(trials):
                k = int(rng.choice(EDGE_COUNTS[:4]))
                frame = sample_stiefel(tag, k, rng)
                moved, _ = _random_action(frame, rng)
                p, q = phi_k(frame), phi_k(moved)
                if quotient_invariant(p).orientation != quotient_invariant(q).orientation:
                    return float("inf")
                worst = max(worst, gram_deviation(p, q))
        return worst


class PipelineEquivariance(PropertyCheck):
    """rotate_polygon(R_G, phi_k(X)) = phi_k(G X) for the rotation R_G induced by G."""

    name = "pipeline_equivariance"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 10)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for _ in range(trials):
                frame = sample_stiefel(tag, int(rng.choice(EDGE_COUNTS[:4])), rng)
                moved, rotation = _random_action(frame, rng)
                expected = rotate_polygon(rotation, phi_k(frame)).edges
                worst = max(worst, float(np.max(np.abs(phi_k(moved).edges - expected))))
        return worst


class ActionsPreserveFrames(PropertyCheck):
    """Fiber and group actions keep the Stiefel sums."""

    name = "actions_preserve_frames"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 10)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for _ in range(trials):
                frame = sample_stiefel(tag, int(rng.choice(EDGE_COUNTS[:4])), rng)
                moved, _ = _random_action(frame, rng)
                worst = max(worst, *frame_residuals(moved.columns).values())
        return worst


class QuotientClasses(PropertyCheck):
    """
    Rotations keep the SO(n) class; a mirror keeps the O(n) class and flips orientation.

    Polygons have n + 2 edges so that they span R^n.
    """

    name = "quotient_classes"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 10)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            n = tag.hopf_dim
            mirror = np.ones(n)
            mirror[-1] = -1.0
            for _ in range(trials):
                p = phi_k(sample_stiefel(tag, n + 2, rng))
                q = rotate_polygon(random_rotation(n, rng), p)
                reflected = PolygonConfig(p.edges * mirror)
                if not equivalent_mod_SO(p, q) or not equivalent_mod_O(p, reflected):
                    return float("inf")
                if equivalent_mod_SO(p, reflected):
                    return float("inf")
                worst = max(worst, gram_deviation(p, q), gram_deviation(p, reflected))
        return worst


class WitnessChain(PropertyCheck):
    """
    Equivalent polygons come with an explicit witness.

    For Y obtained from X by a random group element and random fiber elements, rebuild R from the
    two edge sets, decompose it into a group element and recover each fiber element.
    """

    name = "witness_chain"
    suite = SUITE
    tolerance_field = "witness_tol"

    def trial_count(self, requested: int) -> int:
        return max(1, requested // 20)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for _ in range(trials):
                frame = sample_stiefel(tag, tag.hopf_dim + 3, rng)
                target, _ = _random_action(frame, rng)
                worst = max(worst, equivalence_witness(frame, target).residual)
        return worst


CHECKS: tuple[type[PropertyCheck], ...] = (
    ActionsPreserveFrames,
    DegenerateFiberCount,
    GroupInvariance,
    LiftRoundTrip,
    PipelineClosure,
    PipelineEquivariance,
    QuotientClasses,
    StiefelOrthogonality,
    WitnessChain,
)
