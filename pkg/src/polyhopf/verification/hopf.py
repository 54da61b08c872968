"""
Hopf suite: preimages, the norm lemma and the fiber action in all four algebras.
"""

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.algebra.kernels import norm_sq_coeffs
from polyhopf.config import get_settings
from polyhopf.hopf.maps import (
    fiber_act_coeffs,
    fiber_witness,
    fiber_witness_coeffs,
    hopf_vector_coeffs,
    preimage_coeffs,
)
from polyhopf.hopf.types import Spinor
from polyhopf.verification.base import (
    ALL_TAGS,
    PropertyCheck,
    gaussian,
    norms,
    random_units,
    relative_gap,
    relative_scalar_gap,
)

SUITE = "hopf"

# Share of random spinors whose second coordinate is set to zero, so the y = 0 branch of the
# octonion action is exercised on every run.
ZERO_Y_FRACTION = 0.1


def _spinors(
    rng: np.random.Generator, trials: int, tag: AlgebraTag
) -> tuple[np.ndarray, np.ndarray]:
    x, y = gaussian(rng, 2, trials, tag.dim)
    y[rng.random(trials) < ZERO_Y_FRACTION] = 0.0
    return x, y


def act_on_spinors(tag: AlgebraTag, x: np.ndarray, y: np.ndarray, c: np.ndarray) -> np.ndarray:
    ax, ay = fiber_act_coeffs(
        x, y, c, octonionic=tag is AlgebraTag.OCTONION, zero_tol=get_settings().zero_tol
    )
    return np.concatenate([ax, ay], axis=-1)


class PreimageRoundTrip(PropertyCheck):
    """Phi(preimage(target, theta)) = target for random targets and fiber parameters."""

    name = "preimage_round_trip"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            lam = rng.standard_normal(trials)
            (alpha,) = gaussian(rng, 1, trials, tag.dim)
            theta = random_units(rng, (trials,), tag.dim)
            target = np.concatenate([lam[:, None], alpha], axis=-1)
            x, y = preimage_coeffs(lam, alpha, theta)
            image = hopf_vector_coeffs(x, y)
            worst = max(worst, relative_gap(image, target, np.linalg.norm(target, axis=-1)))
        return worst


class PreimageDegenerateTargets(PropertyCheck):
    """Round trips over targets with alpha = 0, including the origin."""

    name = "preimage_degenerate_targets"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            size = np.abs(rng.standard_normal(trials))
            lam = np.concatenate([size, -size, np.zeros(trials)])
            alpha = np.zeros((lam.shape[0], tag.dim))
            theta = random_units(rng, (lam.shape[0],), tag.dim)
            x, y = preimage_coeffs(lam, alpha, theta)
            target = np.concatenate([lam[:, None], alpha], axis=-1)
            scale = np.maximum(np.abs(lam), 1.0)
            worst = max(worst, relative_gap(hopf_vector_coeffs(x, y), target, scale))
        return worst


class NormLemma(PropertyCheck):
    """|Phi(v)| = |v|^2 / 2."""

    name = "norm_lemma"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            x, y = _spinors(rng, trials, tag)
            size = norm_sq_coeffs(x) + norm_sq_coeffs(y)
            image = np.linalg.norm(hopf_vector_coeffs(x, y), axis=-1)
            worst = max(worst, relative_scalar_gap(image, 0.5 * size, size))
        return worst


class FiberInvariance(PropertyCheck):
    """Phi(v . c) = Phi(v) for every unit c."""

    name = "fiber_invariance"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            x, y = _spinors(rng, trials, tag)
            c = random_units(rng, (trials,), tag.dim)
            moved = act_on_spinors(tag, x, y, c)
            before = hopf_vector_coeffs(x, y)
            after = hopf_vector_coeffs(moved[:, : tag.dim], moved[:, tag.dim :])
            worst = max(worst, relative_gap(after, before, norm_sq_coeffs(x) + norm_sq_coeffs(y)))
        return worst


class WitnessSoundness(PropertyCheck):
    """
    Two spinors lie in one fiber exactly when their Hopf images agree.

    Spinors with equal images get a witness c' with v . c' = w, and c' recovers the unit that
    produced w. Spinors with different images get no witness.
    """

    name = "witness_soundness"
    suite = SUITE

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        settings = get_settings()
        worst = 0.0
        for tag in ALL_TAGS:
            x, y = _spinors(rng, trials, tag)
            c = random_units(rng, (trials,), tag.dim)
            w = act_on_spinors(tag, x, y, c)
            a, b = w[:, : tag.dim], w[:, tag.dim :]
            recovered = fiber_witness_coeffs(x, y, a, b, settings.zero_tol)
            size = np.sqrt(norm_sq_coeffs(x) + norm_sq_coeffs(y))
            worst = max(
                worst,
                relative_gap(act_on_spinors(tag, x, y, recovered), w, size),
                relative_gap(recovered, c, 1.0),
            )
            worst = max(worst, self._value_level(tag, x, y, a, b))
        return worst

    @staticmethod
    def _value_level(
        tag: AlgebraTag, x: np.ndarray, y: np.ndarray, a: np.ndarray, b: np.ndarray
    ) -> float:
        """Decision layer of fiber_witness on a few spinors: found when equal, absent when not."""
        for i in range(min(len(x), 16)):
            v = Spinor(AlgebraElement(tag, x[i]), AlgebraElement(tag, y[i]))
            w = Spinor(AlgebraElement(tag, a[i]), AlgebraElement(tag, b[i]))
            if fiber_witness(v, w) is None:
                return float("inf")
            if fiber_witness(v, Spinor(v.x * 2.0, v.y * 2.0)) is not None:
                return float("inf")
        return 0.0


class FiberDistinctness(PropertyCheck):
    """|v . c - v . c'| = |v| |c - c'|, so distinct units move v to distinct points."""

    name = "fiber_distinctness"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            x, y = gaussian(rng, 2, trials, tag.dim)
            c, c_other = random_units(rng, (2, trials), tag.dim)
            moved, moved_other = act_on_spinors(tag, x, y, c), act_on_spinors(tag, x, y, c_other)
            gap = np.linalg.norm(moved - moved_other, axis=-1)
            expected = np.sqrt(norm_sq_coeffs(x) + norm_sq_coeffs(y)) * norms(c - c_other)
            worst = max(worst, relative_scalar_gap(gap, expected, expected))
        return worst


CHECKS: tuple[type[PropertyCheck], ...] = (
    FiberDistinctness,
    FiberInvariance,
    NormLemma,
    PreimageDegenerateTargets,
    PreimageRoundTrip,
    WitnessSoundness,
)
