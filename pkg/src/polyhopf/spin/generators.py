"""
Generators g(r, u) = ((r, L_conj(u)), (L_u, -r)) and the words they form.

Over the octonions these involutions generate the copy of Spin(9) acting on O^2; the same
formulas make sense over R, C and H, where a word multiplies out to an ordinary 2 x 2 matrix.
Words act right to left: the last factor is applied first.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag
from polyhopf.algebra.kernels import conj_coeffs, mul_coeffs, norm_sq_coeffs, unit_coeffs
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.hopf.types import Spinor
from polyhopf.seeding import SeedLike, as_generator
from polyhopf.spin.rotation import Rotation
from polyhopf.utils.errors import (
    AlgebraMismatchError,
    DimensionMismatchError,
    InvalidElementError,
)


@dataclass(frozen=True, eq=False, slots=True)
class SpinGenerator:
    """The involution g(r, u) with r^2 + |u|^2 = 1."""

    r: float
    u: AlgebraElement

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", float(self.r))
        total = self.r**2 + float(norm_sq_coeffs(self.u.coeffs))
        if abs(total - 1.0) > get_settings().unit_tol:
            raise InvalidElementError(
                f"Generator needs r^2 + |u|^2 = 1, got {total!r}", error_code="NOT_UNIT"
            )

    @property
    def tag(self) -> AlgebraTag:
        return self.u.tag

    def normal(self) -> FloatArray:
        """The unit vector w = (r, conj(u)) in R + F."""
        return np.concatenate([[self.r], conj_coeffs(self.u.coeffs)])

    @classmethod
    def from_normal(cls, tag: AlgebraTag, w: FloatArray) -> SpinGenerator:
        """The generator whose normal (r, conj(u)) is the unit vector w."""
        w = np.asarray(w, dtype=np.float64)
        if w.shape != (tag.hopf_dim,):
            raise DimensionMismatchError("generator normal", tag.hopf_dim, w.shape)
        return cls(float(w[0]), AlgebraElement(tag, conj_coeffs(w[1:])))

    def matrix_coeffs(self) -> FloatArray:
        """g as a (2, 2, d) coefficient array."""
        dim = self.tag.dim
        return np.array(
            [
                [self.r * unit_coeffs(dim), conj_coeffs(self.u.coeffs)],
                [self.u.coeffs, -self.r * unit_coeffs(dim)],
            ]
        )


@dataclass(frozen=True, eq=False, slots=True)
class GeneratorWord:
    """An ordered product g_1 g_2 ... g_m of generators; the empty word is the identity."""

    tag: AlgebraTag
    factors: tuple[SpinGenerator, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        for factor in self.factors:
            if factor.tag is not self.tag:
                raise AlgebraMismatchError(self.tag, factor.tag)

    def __add__(self, other: GeneratorWord) -> GeneratorWord:
        if other.tag is not self.tag:
            raise AlgebraMismatchError(self.tag, other.tag)
        return GeneratorWord(self.tag, self.factors + other.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[SpinGenerator]:
        return iter(self.factors)

    @classmethod
    def of(cls, factors: Sequence[SpinGenerator]) -> GeneratorWord:
        if not factors:
            raise ValueError("Cannot infer the algebra of an empty word; use GeneratorWord(tag)")
        return cls(factors[0].tag, tuple(factors))


def generator_apply_coeffs(
    r: float, u: FloatArray, x: FloatArray, y: FloatArray
) -> tuple[FloatArray, FloatArray]:
    """g(r, u)(x, y) = (r x + conj(u) y, u x - r y) on batched coordinates."""
    return r * x + mul_coeffs(conj_coeffs(u), y), mul_coeffs(u, x) - r * y


def word_apply_coeffs(
    word: GeneratorWord, x: FloatArray, y: FloatArray
) -> tuple[FloatArray, FloatArray]:
    for factor in reversed(word.factors):
        x, y = generator_apply_coeffs(factor.r, factor.u.coeffs, x, y)
    return x, y


def generator_apply(g: SpinGenerator, v: Spinor) -> Spinor:
    if g.tag is not v.tag:
        raise AlgebraMismatchError(g.tag, v.tag)
    x, y = generator_apply_coeffs(g.r, g.u.coeffs, v.x.coeffs, v.y.coeffs)
    return Spinor(AlgebraElement(v.tag, x), AlgebraElement(v.tag, y))


def generator_matrix(g: SpinGenerator) -> FloatArray:
    """rho(r, u) = 2 w w^t - I with w = (r, conj(u))."""
    w = g.normal()
    return 2.0 * np.outer(w, w) - np.eye(w.shape[0])


def generator_rotation(g: SpinGenerator) -> Rotation:
    """
    The rotation of R + F induced by g through the Hopf map.

    Its negative is the reflection in the hyperplane orthogonal to (r, conj(u)). Over R the
    induced map has determinant -1 and is rejected with InvalidRotationError.
    """
    return Rotation(generator_matrix(g))


def word_apply(word: GeneratorWord, v: Spinor) -> Spinor:
    if word.tag is not v.tag:
        raise AlgebraMismatchError(word.tag, v.tag)
    x, y = word_apply_coeffs(word, v.x.coeffs, v.y.coeffs)
    return Spinor(AlgebraElement(v.tag, x), AlgebraElement(v.tag, y))


def word_matrix(word: GeneratorWord) -> FloatArray:
    result = np.eye(word.tag.hopf_dim)
    for factor in word.factors:
        result = result @ generator_matrix(factor)
    return result


def word_rotation(word: GeneratorWord) -> Rotation:
    """rho(g_1) rho(g_2) ... rho(g_m); the image of the word under the 2-to-1 covering."""
    return Rotation(word_matrix(word))


def random_generator(tag: AlgebraTag, seed: SeedLike) -> SpinGenerator:
    """A generator with uniformly distributed normal on the unit sphere of R + F."""
    rng = as_generator(seed)
    w = rng.standard_normal(tag.hopf_dim)
    return SpinGenerator.from_normal(tag, w / np.linalg.norm(w))


def random_word(tag: AlgebraTag, length: int, seed: SeedLike) -> GeneratorWord:
    rng = as_generator(seed)
    return GeneratorWord(tag, tuple(random_generator(tag, rng) for _ in range(length)))
