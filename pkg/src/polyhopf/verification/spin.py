"""
Spin suite: SU(2, F) equivariance, generator reflections, words and their rotations.

Generator checks draw the unit normal w = (r, conj(u)) directly, so a batch of generators is a
(trials, 1 + d) array and the induced maps 2 w w^t - I are built with einsum.
"""

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.algebra.kernels import (
    conj_coeffs,
    dagger_coeffs,
    inner_coeffs,
    matmul_coeffs,
    mul_coeffs,
    norm_sq_coeffs,
)
from polyhopf.hopf.maps import hopf_vector_coeffs, hopf_vectors
from polyhopf.spin.cartan import unitary_from_rotation, word_from_rotation
from polyhopf.spin.generators import (
    GeneratorWord,
    SpinGenerator,
    random_word,
    word_apply_coeffs,
    word_matrix,
)
from polyhopf.spin.rotation import orthogonality_residual, random_rotation
from polyhopf.spin.unitary import (
    adjoint_rotation,
    quaternion_complexify,
    su2_apply_coeffs,
    su2_random,
)
from polyhopf.verification.base import (
    ALL_TAGS,
    ASSOCIATIVE_TAGS,
    PropertyCheck,
    gaussian,
    relative_gap,
    relative_scalar_gap,
)
from polyhopf.verification.hopf import act_on_spinors

SUITE = "spin"
SPINORS_PER_ELEMENT = 10
MAX_WORD_LENGTH = 6


def _per_element(requested: int) -> int:
    return max(1, requested // SPINORS_PER_ELEMENT)


def _random_normals(rng: np.random.Generator, trials: int, n: int) -> np.ndarray:
    w = rng.standard_normal((trials, n))
    return w / np.linalg.norm(w, axis=-1, keepdims=True)


def _generator_matrices(w: np.ndarray) -> np.ndarray:
    return 2.0 * np.einsum("ti,tj->tij", w, w) - np.eye(w.shape[-1])


def _apply_generators(
    w: np.ndarray, x: np.ndarray, y: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """g(r, u)(x, y) for generators w = (r, conj(u)) of shape (t, 1 + d) and spinors (t, s, d)."""
    r = w[:, None, :1]
    u_bar = w[:, None, 1:]
    return r * x + mul_coeffs(u_bar, y), mul_coeffs(conj_coeffs(u_bar), x) - r * y


def _spinor_batch(
    rng: np.random.Generator, trials: int, dim: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x, y = rng.standard_normal((2, trials, SPINORS_PER_ELEMENT, dim))
    return x, y, norm_sq_coeffs(x) + norm_sq_coeffs(y)


class Su2Equivariance(PropertyCheck):
    """pi Phi(A v) = Ad_A(pi Phi(v)) for random A in SO(2), SU(2), Sp(2)."""

    name = "su2_equivariance"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ASSOCIATIVE_TAGS:
            for _ in range(trials):
                A = su2_random(tag, rng)
                rotation = adjoint_rotation(A)
                spinors = rng.standard_normal((SPINORS_PER_ELEMENT, 2, tag.dim))
                moved = hopf_vectors(su2_apply_coeffs(A.entries, spinors))
                expected = rotation.apply(hopf_vectors(spinors))
                scale = norm_sq_coeffs(spinors).sum(axis=-1)
                worst = max(worst, relative_gap(moved, expected, scale))
        return worst


class AdjointRotationGroup(PropertyCheck):
    """Ad_A is orthogonal with determinant 1, and A and -A induce the same rotation."""

    name = "adjoint_rotation_group"
    suite = SUITE
    tolerance_field = "group_tol"

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ASSOCIATIVE_TAGS:
            for _ in range(trials):
                A = su2_random(tag, rng)
                matrix = adjoint_rotation(A).matrix
                worst = max(
                    worst,
                    orthogonality_residual(matrix),
                    abs(float(np.linalg.det(matrix)) - 1.0),
                    float(np.max(np.abs(adjoint_rotation(-A).matrix - matrix))),
                )
        return worst


def _random_hermitian(rng: np.random.Generator, trials: int) -> np.ndarray:
    dim = AlgebraTag.QUATERNION.dim
    X = np.zeros((trials, 2, 2, dim))
    X[:, 0, 0, 0], X[:, 1, 1, 0] = rng.standard_normal((2, trials))
    off = rng.standard_normal((trials, dim))
    X[:, 0, 1] = off
    X[:, 1, 0] = conj_coeffs(off)
    return X


class ComplexifyTraceInvariance(PropertyCheck):
    """tr h(A X A*) = tr h(X) = 2 Re tr X for Hermitian X and A in Sp(2)."""

    name = "complexify_trace_invariance"
    suite = SUITE

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        tag = AlgebraTag.QUATERNION
        A = np.stack([su2_random(tag, rng).entries for _ in range(trials)])
        X = _random_hermitian(rng, trials)
        conjugated = matmul_coeffs(matmul_coeffs(A, X), dagger_coeffs(A))
        before = np.trace(quaternion_complexify(X), axis1=-2, axis2=-1)
        after = np.trace(quaternion_complexify(conjugated), axis1=-2, axis2=-1)
        real_trace = 2.0 * (X[:, 0, 0, 0] + X[:, 1, 1, 0])
        scale = np.sqrt(norm_sq_coeffs(X).sum(axis=(-2, -1)))
        return max(
            relative_scalar_gap(after, before, scale),
            relative_scalar_gap(before, real_trace, scale),
        )


class ComplexifyMultiplicative(PropertyCheck):
    """h(AB) = h(A) h(B) and h(A*) = h(A)^H for random quaternion 2 x 2 matrices."""

    name = "complexify_multiplicative"
    suite = SUITE

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        A, B = rng.standard_normal((2, trials, 2, 2, AlgebraTag.QUATERNION.dim))
        hA, hB = quaternion_complexify(A), quaternion_complexify(B)
        size_a = np.sqrt(norm_sq_coeffs(A).sum(axis=(-2, -1)))
        size_b = np.sqrt(norm_sq_coeffs(B).sum(axis=(-2, -1)))
        product_gap = np.abs(quaternion_complexify(matmul_coeffs(A, B)) - hA @ hB)
        adjoint_gap = np.abs(
            quaternion_complexify(dagger_coeffs(A)) - np.conj(np.swapaxes(hA, -2, -1))
        )
        return max(
            float(np.max(product_gap.max(axis=(-2, -1)) / (size_a * size_b))),
            float(np.max(adjoint_gap.max(axis=(-2, -1)) / size_a)),
        )


class KeyOctonionIdentities(PropertyCheck):
    """
    For r^2 + |u|^2 = 1 and octonions x, y:

        (|rx + conj(u) y|^2 - |ux - ry|^2) / 2 = (r^2 - |u|^2)(|x|^2 - |y|^2) / 2
                                                 + 2r <conj(u), x conj(y)>
        (rx + conj(u) y) conj(ux - ry) = r conj(u)(|x|^2 - |y|^2) - x conj(y)
                                         + 2 conj(u) <conj(u), x conj(y)>
    """

    name = "key_octonion_identities"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        tag = AlgebraTag.OCTONION
        w = _random_normals(rng, trials, tag.hopf_dim)
        r, u_bar = w[:, :1], w[:, 1:]
        u = conj_coeffs(u_bar)
        x, y = gaussian(rng, 2, trials, tag.dim)
        top = r * x + mul_coeffs(u_bar, y)
        bottom = mul_coeffs(u, x) - r * y
        x_yc = mul_coeffs(x, conj_coeffs(y))
        gap_sq = norm_sq_coeffs(x) - norm_sq_coeffs(y)
        pairing = inner_coeffs(u_bar, x_yc)
        r = r[:, 0]
        scale = norm_sq_coeffs(x) + norm_sq_coeffs(y)

        lam_lhs = 0.5 * (norm_sq_coeffs(top) - norm_sq_coeffs(bottom))
        lam_rhs = (r**2 - norm_sq_coeffs(u)) * gap_sq / 2.0 + 2.0 * r * pairing
        alpha_lhs = mul_coeffs(top, conj_coeffs(bottom))
        alpha_rhs = (r * gap_sq)[:, None] * u_bar - x_yc + 2.0 * pairing[:, None] * u_bar
        return max(
            relative_scalar_gap(lam_lhs, lam_rhs, scale),
            relative_gap(alpha_lhs, alpha_rhs, scale),
        )


class GeneratorRotationGroup(PropertyCheck):
    """rho(r, u) = 2 w w^t - I is symmetric and orthogonal with determinant 1 for C, H, O."""

    name = "generator_rotation_group"
    suite = SUITE
    tolerance_field = "group_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            if tag is AlgebraTag.REAL:
                continue
            rho = _generator_matrices(_random_normals(rng, trials, tag.hopf_dim))
            eye = np.eye(tag.hopf_dim)
            worst = max(
                worst,
                float(np.max(np.abs(rho - np.swapaxes(rho, -2, -1)))),
                float(np.max(np.abs(rho @ np.swapaxes(rho, -2, -1) - eye))),
                float(np.max(np.abs(np.linalg.det(rho) - 1.0))),
            )
        return worst


class GeneratorEquivariance(PropertyCheck):
    """pi Phi(g v) = rho(g) pi Phi(v) for random generators and spinors."""

    name = "generator_equivariance"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            w = _random_normals(rng, trials, tag.hopf_dim)
            x, y, scale = _spinor_batch(rng, trials, tag.dim)
            moved = hopf_vector_coeffs(*_apply_generators(w, x, y))
            expected = np.einsum("tij,tsj->tsi", _generator_matrices(w), hopf_vector_coeffs(x, y))
            worst = max(worst, relative_gap(moved, expected, scale))
        return worst


class GeneratorInvolution(PropertyCheck):
    """g(g v) = v and rho(g)^2 = I."""

    name = "generator_involution"
    suite = SUITE
    tolerance_field = "identity_tol"

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            w = _random_normals(rng, trials, tag.hopf_dim)
            x, y, scale = _spinor_batch(rng, trials, tag.dim)
            twice = np.concatenate(_apply_generators(w, *_apply_generators(w, x, y)), axis=-1)
            rho = _generator_matrices(w)
            worst = max(
                worst,
                relative_gap(twice, np.concatenate([x, y], axis=-1), np.sqrt(scale)),
                float(np.max(np.abs(rho @ rho - np.eye(tag.hopf_dim)))),
            )
        return worst


class ReflectionProperty(PropertyCheck):
    """-rho(r, u) fixes the hyperplane orthogonal to (r, conj(u)) and negates (r, conj(u))."""

    name = "reflection_property"
    suite = SUITE
    tolerance_field = "identity_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            w = _random_normals(rng, trials, tag.hopf_dim)
            reflection = -_generator_matrices(w)
            p = rng.standard_normal((trials, tag.hopf_dim))
            p -= np.sum(p * w, axis=-1, keepdims=True) * w
            fixed = np.einsum("tij,tj->ti", reflection, p)
            negated = np.einsum("tij,tj->ti", reflection, w)
            worst = max(
                worst,
                relative_gap(fixed, p, np.linalg.norm(p, axis=-1)),
                relative_gap(negated, -w, 1.0),
            )
        return worst


class SpinKernel(PropertyCheck):
    """The word g(0, 1) g(0, -1) negates every spinor but induces the identity rotation."""

    name = "spin_kernel"
    suite = SUITE
    exact = True

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            one = AlgebraElement.one(tag)
            word = GeneratorWord(tag, (SpinGenerator(0.0, one), SpinGenerator(0.0, -one)))
            x, y = gaussian(rng, 2, trials, tag.dim)
            wx, wy = word_apply_coeffs(word, x, y)
            worst = max(
                worst,
                float(np.max(np.abs(word_matrix(word) - np.eye(tag.hopf_dim)))),
                float(np.max(np.abs(wx + x))),
                float(np.max(np.abs(wy + y))),
            )
        return worst


def _random_words(
    rng: np.random.Generator, tag: AlgebraTag, trials: int
) -> list[GeneratorWord]:
    lengths = rng.integers(0, MAX_WORD_LENGTH + 1, size=trials)
    return [random_word(tag, int(length), rng) for length in lengths]


class WordEquivariance(PropertyCheck):
    """pi Phi(W v) = R_W pi Phi(v) for random words of length at most 6."""

    name = "word_equivariance"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for word in _random_words(rng, tag, trials):
                x, y = rng.standard_normal((2, SPINORS_PER_ELEMENT, tag.dim))
                moved = hopf_vector_coeffs(*word_apply_coeffs(word, x, y))
                expected = hopf_vector_coeffs(x, y) @ word_matrix(word).T
                scale = norm_sq_coeffs(x) + norm_sq_coeffs(y)
                worst = max(worst, relative_gap(moved, expected, scale))
        return worst


class FiberwiseWords(PropertyCheck):
    """Words map Hopf fibers to Hopf fibers: Phi(v) = Phi(w) implies Phi(W v) = Phi(W w)."""

    name = "fiberwise_words"
    suite = SUITE

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for word in _random_words(rng, tag, trials):
                x, y = rng.standard_normal((2, SPINORS_PER_ELEMENT, tag.dim))
                c = rng.standard_normal((SPINORS_PER_ELEMENT, tag.dim))
                c /= np.sqrt(norm_sq_coeffs(c))[:, None]
                partner = act_on_spinors(tag, x, y, c)
                px, py = partner[:, : tag.dim], partner[:, tag.dim :]
                first = hopf_vector_coeffs(*word_apply_coeffs(word, x, y))
                second = hopf_vector_coeffs(*word_apply_coeffs(word, px, py))
                scale = norm_sq_coeffs(x) + norm_sq_coeffs(y)
                worst = max(worst, relative_gap(first, second, scale))
        return worst


class WordHomomorphism(PropertyCheck):
    """R_{W1 W2} = R_{W1} R_{W2}."""

    name = "word_homomorphism"
    suite = SUITE
    tolerance_field = "identity_tol"

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            firsts = _random_words(rng, tag, trials)
            seconds = _random_words(rng, tag, trials)
            for first, second in zip(firsts, seconds, strict=True):
                joined = word_matrix(first + second)
                split = word_matrix(first) @ word_matrix(second)
                worst = max(worst, float(np.max(np.abs(joined - split))))
        return worst


class CartanReconstruction(PropertyCheck):
    """A Haar-random rotation of R + F is induced by a word of at most 1 + dim F generators."""

    name = "cartan_reconstruction"
    suite = SUITE
    tolerance_field = "reconstruction_tol"

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            for _ in range(trials):
                rotation = random_rotation(tag.hopf_dim, rng)
                word = word_from_rotation(rotation, tag)
                if len(word) > tag.hopf_dim + 1 or len(word) % 2:
                    return float("inf")
                worst = max(worst, float(np.linalg.norm(word_matrix(word) - rotation.matrix)))
        return worst


class UnitaryReconstruction(PropertyCheck):
    """Every rotation of R + F is Ad_A for some A in SU(2, F), F associative."""

    name = "unitary_reconstruction"
    suite = SUITE
    tolerance_field = "reconstruction_tol"

    def trial_count(self, requested: int) -> int:
        return _per_element(requested)

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ASSOCIATIVE_TAGS:
            for _ in range(trials):
                rotation = random_rotation(tag.hopf_dim, rng)
                rebuilt = adjoint_rotation(unitary_from_rotation(rotation, tag))
                worst = max(worst, rebuilt.distance(rotation))
        return worst


CHECKS: tuple[type[PropertyCheck], ...] = (
    AdjointRotationGroup,
    CartanReconstruction,
    ComplexifyMultiplicative,
    ComplexifyTraceInvariance,
    FiberwiseWords,
    GeneratorEquivariance,
    GeneratorInvolution,
    GeneratorRotationGroup,
    KeyOctonionIdentities,
    ReflectionProperty,
    SpinKernel,
    Su2Equivariance,
    UnitaryReconstruction,
    WordEquivariance,
    WordHomomorphism,
)
