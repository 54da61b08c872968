"""
Algebra tags and immutable algebra elements.

An AlgebraElement is a real coefficient vector over the standard basis of its algebra. Position 0
is the unit e; the remaining positions carry the octonion labels of BASIS_LABELS, so a quaternion
stores (a0, a1, a2, a4) for a0 e + a1 e1 + a2 e2 + a4 e4.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Any

import numpy as np

from polyhopf.algebra import kernels
from polyhopf.algebra.tables import BASIS_LABELS, FloatArray
from polyhopf.utils.errors import (
    AlgebraMismatchError,
    InvalidElementError,
    NonInvertibleError,
)


class AlgebraTag(IntEnum):
    """The four normed division algebras, valued by their real dimension."""

    REAL = 1
    COMPLEX = 2
    QUATERNION = 4
    OCTONION = 8

    @property
    def dim(self) -> int:
        return int(self.value)

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def labels(self) -> tuple[int, ...]:
        return BASIS_LABELS[self.dim]

    @property
    def hopf_dim(self) -> int:
        """Dimension n = 1 + dim of the Hopf image R + F."""
        return 1 + self.dim

    @property
    def associative(self) -> bool:
        return self is not AlgebraTag.OCTONION

    @classmethod
    def from_symbol(cls, symbol: str) -> AlgebraTag:
        try:
            return _BY_SYMBOL[symbol.upper()]
        except KeyError:
            raise ValueError(f"Unknown algebra {symbol!r}; expected one of R, C, H, O") from None

    @classmethod
    def from_hopf_dim(cls, n: int) -> AlgebraTag:
        try:
            return cls(n - 1)
        except ValueError:
            raise ValueError(f"No algebra has Hopf image dimension {n}") from None

    def __str__(self) -> str:
        return self.symbol


_SYMBOLS = {
    AlgebraTag.REAL: "R",
    AlgebraTag.COMPLEX: "C",
    AlgebraTag.QUATERNION: "H",
    AlgebraTag.OCTONION: "O",
}
_BY_SYMBOL = {symbol: tag for tag, symbol in _SYMBOLS.items()}


def _frozen(values: Any, dim: int) -> FloatArray:
    array = np.array(values, dtype=np.float64)
    if array.shape != (dim,):
        raise InvalidElementError(f"Expected {dim} coefficients, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise InvalidElementError("Coefficients must be finite")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False, slots=True)
class AlgebraElement:
    """A value of R, C, H or O as coefficients over the standard basis."""

    tag: AlgebraTag
    coeffs: FloatArray

    def __post_init__(self) -> None:
        object.__setattr__(self, "tag", AlgebraTag(self.tag))
        object.__setattr__(self, "coeffs", _frozen(self.coeffs, self.tag.dim))

    # Constructors

    @classmethod
    def zero(cls, tag: AlgebraTag) -> AlgebraElement:
        return cls(tag, np.zeros(tag.dim))

    @classmethod
    def one(cls, tag: AlgebraTag) -> AlgebraElement:
        return cls(tag, kernels.unit_coeffs(tag.dim))

    @classmethod
    def real(cls, tag: AlgebraTag, value: float) -> AlgebraElement:
        return cls(tag, kernels.unit_coeffs(tag.dim) * value)

    @classmethod
    def basis(cls, tag: AlgebraTag, label: int) -> AlgebraElement:
        """
        The basis vector e_label (label 0 is the unit).

        Raises:
            InvalidElementError: If e_label does not lie in the algebra
        """
        if label not in tag.labels:
            raise InvalidElementError(f"e{label} is not a basis vector of {tag}")
        coeffs = np.zeros(tag.dim)
        coeffs[tag.labels.index(label)] = 1.0
        return cls(tag, coeffs)

    @classmethod
    def from_labels(cls, tag: AlgebraTag, terms: dict[int, float]) -> AlgebraElement:
        """Build sum(coefficient * e_label) from a label -> coefficient mapping."""
        coeffs = np.zeros(tag.dim)
        for label, value in terms.items():
            coeffs[tag.labels.index(label)] += value
        return cls(tag, coeffs)

    # Arithmetic

    def __mul__(self, other: AlgebraElement | float) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return AlgebraElement(self.tag, self.coeffs * float(other))

    def __rmul__(self, other: float) -> AlgebraElement:
        return AlgebraElement(self.tag, self.coeffs * float(other))

    def __truediv__(self, other: float) -> AlgebraElement:
        return AlgebraElement(self.tag, self.coeffs / float(other))

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        _require_same_tag(self, other)
        return AlgebraElement(self.tag, self.coeffs + other.coeffs)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        _require_same_tag(self, other)
        return AlgebraElement(self.tag, self.coeffs - other.coeffs)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.tag, -self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.tag is other.tag and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def isclose(self, other: AlgebraElement, tol: float = 1e-12) -> bool:
        _require_same_tag(self, other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def __repr__(self) -> str:
        terms = [
            f"{value:g}" if label == 0 else f"{value:g}e{label}"
            for label, value in zip(self.tag.labels, self.coeffs, strict=True)
            if value != 0.0
        ]
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{self.tag.symbol}({body})"


def _require_same_tag(a: AlgebraElement, b: AlgebraElement) -> None:
    if a.tag is not b.tag:
        raise AlgebraMismatchError(a.tag, b.tag)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """
    Bilinear product through the structure table.

    Raises:
        AlgebraMismatchError: If a and b belong to different algebras
    """
    _require_same_tag(a, b)
    return AlgebraElement(a.tag, kernels.mul_coeffs(a.coeffs, b.coeffs))


def conj(a: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(a.tag, kernels.conj_coeffs(a.coeffs))


def norm_sq(a: AlgebraElement) -> float:
    return float(kernels.norm_sq_coeffs(a.coeffs))


def norm(a: AlgebraElement) -> float:
    return float(np.sqrt(norm_sq(a)))


def inner(a: AlgebraElement, b: AlgebraElement) -> float:
    _require_same_tag(a, b)
    return float(kernels.inner_coeffs(a.coeffs, b.coeffs))


def inverse(a: AlgebraElement) -> AlgebraElement:
    """
    Multiplicative inverse conj(a) / |a|^2.

    Raises:
        NonInvertibleError: If a is zero
    """
    if norm_sq(a) == 0.0:
        raise NonInvertibleError()
    return AlgebraElement(a.tag, kernels.inverse_coeffs(a.coeffs))


def real_part(a: AlgebraElement) -> float:
    return float(a.coeffs[0])


def imag_part(a: AlgebraElement) -> AlgebraElement:
    coeffs = a.coeffs.copy()
    coeffs[0] = 0.0
    return AlgebraElement(a.tag, coeffs)
