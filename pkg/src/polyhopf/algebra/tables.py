"""
Multiplication tables of the normed division algebras.

The octonion table is generated from the seven-line relation family

    e_i e_{i+1} = e_{i+3},  e_{i+1} e_{i+3} = e_i,  e_{i+3} e_i = e_{i+1}   (indices mod 7 in 1..7)

with e_i^2 = -1 and anticommuting distinct imaginaries, and then compared entry by entry with an
independently computed Cayley-Dickson table. The real, complex and quaternion tables are
restrictions of the octonion one to the labels {0}, {0, 1} and {0, 1, 2, 4}.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from polyhopf.utils.errors import StructureTableError
from polyhopf.utils.logging import get_logger

logger = get_logger(__name__)

IntArray = npt.NDArray[np.int64]
FloatArray = npt.NDArray[np.float64]

# Basis labels of each algebra inside the octonions, indexed by dimension.
BASIS_LABELS: dict[int, tuple[int, ...]] = {
    1: (0,),
    2: (0, 1),
    4: (0, 1, 2, 4),
    8: (0, 1, 2, 3, 4, 5, 6, 7),
}

# Cayley-Dickson position p of the doubled quaternions (a, b) = a + b*l, l = e7, equals
# CD_TO_LABEL[p][1] * e_{CD_TO_LABEL[p][0]}.
CD_TO_LABEL: tuple[tuple[int, int], ...] = (
    (0, 1),
    (1, 1),
    (2, 1),
    (4, 1),
    (7, 1),
    (3, -1),
    (6, -1),
    (5, -1),
)


def _cyclic(i: int) -> int:
    """Reduce an imaginary index into 1..7."""
    return (i - 1) % 7 + 1


def fano_triples() -> tuple[tuple[int, int, int], ...]:
    """The seven oriented triples (i, i+1, i+3) with e_a e_b = e_c."""
    return tuple((i, _cyclic(i + 1), _cyclic(i + 3)) for i in range(1, 8))


class RelationInstance(NamedTuple):
    """One instance e_left * e_right = sign * e_result of the defining relations."""

    left: int
    right: int
    sign: int
    result: int

    def describe(self) -> str:
        prefix = "" if self.sign > 0 else "-"
        return f"e{self.left}*e{self.right} = {prefix}e{self.result}"


def relation_instances() -> list[RelationInstance]:
    """
    All 49 instances of the octonion relations: seven templates for each i in 1..7.

    The result of e_i^2 = -1 is recorded with result index 0 (the unit).
    """
    instances: list[RelationInstance] = []
    for i in range(1, 8):
        a, b, c = i, _cyclic(i + 1), _cyclic(i + 3)
        instances.extend(
            [
                RelationInstance(a, a, -1, 0),
                RelationInstance(a, b, 1, c),
                RelationInstance(b, a, -1, c),
                RelationInstance(b, c, 1, a),
                RelationInstance(c, b, -1, a),
                RelationInstance(c, a, 1, b),
                RelationInstance(a, c, -1, b),
            ]
        )
    return instances


@dataclass(frozen=True, eq=False)
class StructureTable:
    """
    Signed-index multiplication table: e_i * e_j = sign[i, j] * e_{index[i, j]}.

    Rows and columns are positions in the algebra's own basis; ``labels`` records which
    octonion basis vector each position stands for.
    """

    index: IntArray
    sign: IntArray
    labels: tuple[int, ...]

    @property
    def dim(self) -> int:
        return int(self.index.shape[0])

    @classmethod
    def from_relations(cls) -> "StructureTable":
        """Build the octonion table from the relation family."""
        index = np.zeros((8, 8), dtype=np.int64)
        sign = np.ones((8, 8), dtype=np.int64)
        for i in range(8):
            index[0, i] = i
            index[i, 0] = i
        for i in range(1, 8):
            index[i, i] = 0
            sign[i, i] = -1
        for a, b, c in fano_triples():
            for left, right, result in ((a, b, c), (b, c, a), (c, a, b)):
                index[left, right] = result
                index[right, left] = result
                sign[right, left] = -1
        return cls(index=index, sign=sign, labels=BASIS_LABELS[8])

    @classmethod
    def from_cayley_dickson(cls, dim: int) -> "StructureTable":
        """
        Build the table of the dim-dimensional Cayley-Dickson algebra in its native basis.

        Positions are Cayley-Dickson positions, so for dim = 8 the table still has to be
        relabelled with CD_TO_LABEL before it can be compared with the relation table.
        """
        if dim not in BASIS_LABELS:
            raise ValueError(f"No Cayley-Dickson algebra of dimension {dim}")
        eye = np.eye(dim)
        index = np.zeros((dim, dim), dtype=np.int64)
        sign = np.zeros((dim, dim), dtype=np.int64)
        for i in range(dim):
            for j in range(dim):
                product = cayley_dickson_mul(eye[i], eye[j])
                k = int(np.flatnonzero(product)[0])
                index[i, j] = k
                sign[i, j] = int(product[k])
        return cls(index=index, sign=sign, labels=tuple(range(dim)))

    def restrict(self, labels: tuple[int, ...]) -> "StructureTable":
        """Restrict to the subalgebra spanned by the given labels (which must be closed)."""
        position = {label: p for p, label in enumerate(self.labels)}
        local = {label: p for p, label in enumerate(labels)}
        dim = len(labels)
        index = np.zeros((dim, dim), dtype=np.int64)
        sign = np.zeros((dim, dim), dtype=np.int64)
        for i, li in enumerate(labels):
            for j, lj in enumerate(labels):
                result_label = self.labels[self.index[position[li], position[lj]]]
                if result_label not in local:
                    raise ValueError(f"Labels {labels} do not span a subalgebra")
                index[i, j] = local[result_label]
                sign[i, j] = self.sign[position[li], position[lj]]
        return StructureTable(index=index, sign=sign, labels=labels)

    def tensor(self) -> FloatArray:
        """Dense structure tensor T with e_i * e_j = sum_k T[i, j, k] e_k."""
        dim = self.dim
        tensor = np.zeros((dim, dim, dim))
        rows, cols = np.indices((dim, dim))
        tensor[rows, cols, self.index] = self.sign
        return tensor

    def product(self, left: int, right: int) -> tuple[int, int]:
        """Return (sign, label) of e_left * e_right, addressed by octonion labels."""
        position = {label: p for p, label in enumerate(self.labels)}
        i, j = position[left], position[right]
        return int(self.sign[i, j]), self.labels[self.index[i, j]]

    def mismatches(self, other: "StructureTable") -> list[tuple[int, int]]:
        """Label pairs whose products differ between two tables over the same labels."""
        return [
            (li, lj)
            for li in self.labels
            for lj in self.labels
            if self.product(li, lj) != other.product(li, lj)
        ]


def cayley_dickson_mul(a: FloatArray, b: FloatArray) -> FloatArray:
    """
    Cayley-Dickson product (p, q)(r, s) = (pr - conj(s) q, s p + q conj(r)).

    Works recursively on coefficient vectors whose length is a power of two.
    """
    n = a.shape[0]
    if n == 1:
        return a * b
    h = n // 2
    p, q = a[:h], a[h:]
    r, s = b[:h], b[h:]
    return np.concatenate(
        [
            cayley_dickson_mul(p, r) - cayley_dickson_mul(cayley_dickson_conj(s), q),
            cayley_dickson_mul(s, p) + cayley_dickson_mul(q, cayley_dickson_conj(r)),
        ]
    )


def cayley_dickson_conj(a: FloatArray) -> FloatArray:
    out = -a
    out[0] = a[0]
    return out


def relabelled_cayley_dickson_table() -> StructureTable:
    """The Cayley-Dickson octonion table rewritten in the e0..e7 relation labels."""
    native = StructureTable.from_cayley_dickson(8)
    position_of = {label: (p, s) for p, (label, s) in enumerate(CD_TO_LABEL)}
    index = np.zeros((8, 8), dtype=np.int64)
    sign = np.zeros((8, 8), dtype=np.int64)
    for li in range(8):
        for lj in range(8):
            pi, si = position_of[li]
            pj, sj = position_of[lj]
            pk = int(native.index[pi, pj])
            label, sk = CD_TO_LABEL[pk]
            index[li, lj] = label
            sign[li, lj] = si * sj * int(native.sign[pi, pj]) * sk
    return StructureTable(index=index, sign=sign, labels=BASIS_LABELS[8])


def _format_product(sign: int, label: int) -> str:
    return f"{'' if sign > 0 else '-'}e{label}"


@lru_cache
def octonion_table() -> StructureTable:
    """
    The verified octonion table.

    Raises:
        StructureTableError: If the relation table and the Cayley-Dickson table disagree
    """
    relations = StructureTable.from_relations()
    doubling = relabelled_cayley_dickson_table()
    mismatches = relations.mismatches(doubling)
    if mismatches:
        row, column = mismatches[0]
        logger.critical(
            "Octonion tables disagree",
            extra={"mismatch_count": len(mismatches), "first_mismatch": [row, column]},
        )
        raise StructureTableError(
            row,
            column,
            _format_product(*relations.product(row, column)),
            _format_product(*doubling.product(row, column)),
        )
    logger.debug("Octonion table verified against Cayley-Dickson doubling")
    return relations


@lru_cache
def table_for(dim: int) -> StructureTable:
    """The table of the algebra of the given dimension, restricted from the octonions."""
    if dim not in BASIS_LABELS:
        raise ValueError(f"No normed division algebra of dimension {dim}")
    return octonion_table().restrict(BASIS_LABELS[dim])
