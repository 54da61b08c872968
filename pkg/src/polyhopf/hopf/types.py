"""
Value types of the Hopf construction: spinors, Hopf images and unit fiber elements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from polyhopf.algebra.element import AlgebraElement, AlgebraTag, conj, norm_sq
from polyhopf.algebra.tables import FloatArray
from polyhopf.config import get_settings
from polyhopf.utils.errors import AlgebraMismatchError, InvalidElementError


@dataclass(frozen=True, eq=False, slots=True)
class Spinor:
    """A pair (x, y) in F^2, the domain of the Hopf map."""

    x: AlgebraElement
    y: AlgebraElement

    def __post_init__(self) -> None:
        if self.x.tag is not self.y.tag:
            raise AlgebraMismatchError(self.x.tag, self.y.tag)

    @property
    def tag(self) -> AlgebraTag:
        return self.x.tag

    @property
    def norm_sq(self) -> float:
        return norm_sq(self.x) + norm_sq(self.y)

    def coeffs(self) -> FloatArray:
        """The spinor as a (2, d) coefficient array."""
        return np.stack([self.x.coeffs, self.y.coeffs])

    @classmethod
    def from_coeffs(cls, tag: AlgebraTag, coeffs: FloatArray) -> Spinor:
        return cls(AlgebraElement(tag, coeffs[0]), AlgebraElement(tag, coeffs[1]))

    @classmethod
    def zero(cls, tag: AlgebraTag) -> Spinor:
        return cls(AlgebraElement.zero(tag), AlgebraElement.zero(tag))

    def __neg__(self) -> Spinor:
        return Spinor(-self.x, -self.y)

    def isclose(self, other: Spinor, tol: float = 1e-12) -> bool:
        return self.x.isclose(other.x, tol) and self.y.isclose(other.y, tol)

    def distance(self, other: Spinor) -> float:
        return float(np.linalg.norm(self.coeffs() - other.coeffs()))


@dataclass(frozen=True, eq=False, slots=True)
class HopfImage:
    """
    A point (lambda, alpha) of R + F.

    Stands for the traceless Hermitian matrix ((lambda, alpha), (conj(alpha), -lambda)) and for
    the real vector (lambda, alpha_0, ..., alpha_{d-1}) of length 1 + dim F.
    """

    lam: float
    alpha: AlgebraElement

    @property
    def tag(self) -> AlgebraTag:
        return self.alpha.tag

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.lam**2 + norm_sq(self.alpha)))

    def to_vector(self) -> FloatArray:
        return np.concatenate([[self.lam], self.alpha.coeffs])

    @classmethod
    def from_vector(cls, tag: AlgebraTag, vector: FloatArray) -> HopfImage:
        vector = np.asarray(vector, dtype=np.float64)
        if vector.shape != (tag.hopf_dim,):
            raise InvalidElementError(
                f"Hopf image over {tag} needs {tag.hopf_dim} coordinates, got {vector.shape}"
            )
        return cls(float(vector[0]), AlgebraElement(tag, vector[1:]))

    def to_matrix(self) -> tuple[tuple[AlgebraElement, AlgebraElement], ...]:
        """The traceless Hermitian matrix with entries in F."""
        tag = self.tag
        return (
            (AlgebraElement.real(tag, self.lam), self.alpha),
            (conj(self.alpha), AlgebraElement.real(tag, -self.lam)),
        )

    @classmethod
    def from_matrix(cls, matrix: tuple[tuple[AlgebraElement, AlgebraElement], ...]) -> HopfImage:
        """Read (lambda, alpha) off the first row of a traceless Hermitian matrix."""
        return cls(float(matrix[0][0].coeffs[0]), matrix[0][1])

    def isclose(self, other: HopfImage, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.to_vector() - other.to_vector())) <= tol)


@dataclass(frozen=True, eq=False, slots=True)
class UnitElement:
    """An element of F(1), the unit sphere of F; for O this is the Moufang loop O(1)."""

    value: AlgebraElement

    def __post_init__(self) -> None:
        deviation = abs(norm_sq(self.value) - 1.0)
        if deviation > get_settings().unit_tol:
            raise InvalidElementError(
                f"Unit element has |c|^2 = {norm_sq(self.value)!r}", error_code="NOT_UNIT"
            )

    @property
    def tag(self) -> AlgebraTag:
        return self.value.tag

    @classmethod
    def one(cls, tag: AlgebraTag) -> UnitElement:
        return cls(AlgebraElement.one(tag))

    @classmethod
    def normalized(cls, value: AlgebraElement) -> UnitElement:
        """Scale a nonzero element onto the unit sphere."""
        size = float(np.sqrt(norm_sq(value)))
        if size == 0.0:
            raise InvalidElementError("Cannot normalize the zero element")
        return cls(value / size)

    @classmethod
    def random(cls, tag: AlgebraTag, rng: np.random.Generator) -> UnitElement:
        return cls.normalized(AlgebraElement(tag, rng.standard_normal(tag.dim)))
