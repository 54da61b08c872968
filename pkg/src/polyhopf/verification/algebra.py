"""
Algebra suite: the multiplication table and the identities of normed division algebras.
"""

import numpy as np

from polyhopf.algebra import kernels
from polyhopf.algebra.element import AlgebraTag
from polyhopf.algebra.kernels import conj_coeffs, inner_coeffs, inverse_coeffs, mul_coeffs
from polyhopf.algebra.tables import (
    BASIS_LABELS,
    StructureTable,
    relabelled_cayley_dickson_table,
    relation_instances,
)
from polyhopf.verification.base import (
    ALL_TAGS,
    PropertyCheck,
    gaussian,
    norms,
    relative_gap,
    relative_scalar_gap,
)

SUITE = "algebra"
OCTONION_DIM = AlgebraTag.OCTONION.dim


def _kernel_table(dim: int) -> np.ndarray:
    """The structure tensor the product kernel actually multiplies with, as (d, d, d)."""
    return kernels.structure_tensor(dim).reshape(dim, dim, dim)


def _associator(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return mul_coeffs(mul_coeffs(a, b), c) - mul_coeffs(a, mul_coeffs(b, c))


class RelationTable(PropertyCheck):
    """All 49 relation instances e_i e_j = +-e_k hold exactly for basis products."""

    name = "relation_table"
    suite = SUITE
    exact = True

    def trial_count(self, requested: int) -> int:
        return len(relation_instances())

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        instances = relation_instances()
        eye = np.eye(OCTONION_DIM)
        left = eye[[rel.left for rel in instances]]
        right = eye[[rel.right for rel in instances]]
        expected = np.array([rel.sign for rel in instances])[:, None] * eye[
            [rel.result for rel in instances]
        ]
        return float(np.max(np.abs(mul_coeffs(left, right) - expected)))


class CayleyDicksonAgreement(PropertyCheck):
    name = "cayley_dickson_agreement"
    suite = SUITE
    exact = True

    def trial_count(self, requested: int) -> int:
        return OCTONION_DIM * OCTONION_DIM

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        doubling = relabelled_cayley_dickson_table().tensor()
        return float(np.max(np.abs(_kernel_table(OCTONION_DIM) - doubling)))


class SubalgebraConsistency(PropertyCheck):
    """The restricted R, C and H tables equal the Cayley-Dickson tables of those algebras."""

    name = "subalgebra_consistency"
    suite = SUITE
    exact = True

    def trial_count(self, requested: int) -> int:
        return len(BASIS_LABELS) - 1

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for dim in (1, 2, 4):
            native = StructureTable.from_cayley_dickson(dim).tensor()
            worst = max(worst, float(np.max(np.abs(_kernel_table(dim) - native))))
        return worst


class NonAssociativityWitness(PropertyCheck):
    """(e1 e2)(e2 e3) = e7 while e1((e2 e2) e3) = -e7."""

    name = "non_associativity_witness"
    suite = SUITE
    exact = True

    def trial_count(self, requested: int) -> int:
        return 1

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        e = np.eye(OCTONION_DIM)
        grouped = mul_coeffs(mul_coeffs(e[1], e[2]), mul_coeffs(e[2], e[3]))
        nested = mul_coeffs(e[1], mul_coeffs(mul_coeffs(e[2], e[2]), e[3]))
        return float(max(np.max(np.abs(grouped - e[7])), np.max(np.abs(nested + e[7]))))


class CompositionLaw(PropertyCheck):
    """|ab| = |a||b| in every algebra."""

    name = "composition_law"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            a, b = gaussian(rng, 2, trials, tag.dim)
            scale = norms(a) * norms(b)
            gap = relative_scalar_gap(norms(mul_coeffs(a, b)), scale, scale)
            worst = max(worst, gap)
        return worst


class RankEquation(PropertyCheck):
    """x^2 = 2<x, e> x - |x|^2 e."""

    name = "rank_equation"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            (x,) = gaussian(rng, 1, trials, tag.dim)
            rhs = 2.0 * x[:, :1] * x
            rhs[:, 0] -= np.sum(x * x, axis=-1)
            worst = max(worst, relative_gap(mul_coeffs(x, x), rhs, norms(x) ** 2))
        return worst


class InnerProductScaling(PropertyCheck):
    """<ax, bx> = <a, b>|x|^2 and <ax, ay> = |a|^2 <x, y>."""

    name = "inner_product_scaling"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            a, b, x, y = gaussian(rng, 4, trials, tag.dim)
            right = relative_scalar_gap(
                inner_coeffs(mul_coeffs(a, x), mul_coeffs(b, x)),
                inner_coeffs(a, b) * norms(x) ** 2,
                norms(a) * norms(b) * norms(x) ** 2,
            )
            left = relative_scalar_gap(
                inner_coeffs(mul_coeffs(a, x), mul_coeffs(a, y)),
                norms(a) ** 2 * inner_coeffs(x, y),
                norms(a) ** 2 * norms(x) * norms(y),
            )
            worst = max(worst, right, left)
        return worst


class ConjugationIdentities(PropertyCheck):
    """x(conj(x) y) = |x|^2 y, (x conj(y)) y = |y|^2 x, x(conj(y) z) + y(conj(x) z) = 2<x,y> z."""

    name = "conjugation_identities"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            x, y, z = gaussian(rng, 3, trials, tag.dim)
            nx, ny, nz = norms(x), norms(y), norms(z)
            worst = max(
                worst,
                relative_gap(
                    mul_coeffs(x, mul_coeffs(conj_coeffs(x), y)), nx[:, None] ** 2 * y, nx**2 * ny
                ),
                relative_gap(
                    mul_coeffs(mul_coeffs(x, conj_coeffs(y)), y), ny[:, None] ** 2 * x, nx * ny**2
                ),
                relative_gap(
                    mul_coeffs(x, mul_coeffs(conj_coeffs(y), z))
                    + mul_coeffs(y, mul_coeffs(conj_coeffs(x), z)),
                    2.0 * inner_coeffs(x, y)[:, None] * z,
                    nx * ny * nz,
                ),
            )
        return worst


class ConjugationAntiAutomorphism(PropertyCheck):
    """conj(ab) = conj(b) conj(a) and a conj(a) = |a|^2 e."""

    name = "conjugation_anti_automorphism"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            a, b = gaussian(rng, 2, trials, tag.dim)
            swapped = relative_gap(
                conj_coeffs(mul_coeffs(a, b)),
                mul_coeffs(conj_coeffs(b), conj_coeffs(a)),
                norms(a) * norms(b),
            )
            squared = np.zeros_like(a)
            squared[:, 0] = np.sum(a * a, axis=-1)
            norm_form = relative_gap(mul_coeffs(a, conj_coeffs(a)), squared, norms(a) ** 2)
            worst = max(worst, swapped, norm_form)
        return worst


class InverseIdentity(PropertyCheck):
    """a inverse(a) = inverse(a) a = e for nonzero a."""

    name = "inverse_identity"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        worst = 0.0
        for tag in ALL_TAGS:
            (a,) = gaussian(rng, 1, trials, tag.dim)
            unit = np.zeros(tag.dim)
            unit[0] = 1.0
            inv = inverse_coeffs(a)
            worst = max(
                worst,
                relative_gap(mul_coeffs(a, inv), unit, 1.0),
                relative_gap(mul_coeffs(inv, a), unit, 1.0),
            )
        return worst


class AlternativeLaws(PropertyCheck):
    """(xy)x = x(yx), x(xy) = x^2 y and (xy)y = x y^2 over the octonions."""

    name = "alternative_laws"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        x, y = gaussian(rng, 2, trials, OCTONION_DIM)
        nx, ny = norms(x), norms(y)
        xy = mul_coeffs(x, y)
        flexible = relative_gap(mul_coeffs(xy, x), mul_coeffs(x, mul_coeffs(y, x)), nx**2 * ny)
        left = relative_gap(mul_coeffs(x, xy), mul_coeffs(mul_coeffs(x, x), y), nx**2 * ny)
        right = relative_gap(mul_coeffs(xy, y), mul_coeffs(x, mul_coeffs(y, y)), nx * ny**2)
        return max(flexible, left, right)


class MoufangIdentities(PropertyCheck):
    """
    The three Moufang identities over the octonions:

        (ax)(ya) = a((xy)a),  a(x(ay)) = (a(xa))y,  x(a(ya)) = ((xa)y)a
    """

    name = "moufang_identities"
    suite = SUITE
    tolerance_field = "product_tol"

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        a, x, y = gaussian(rng, 3, trials, OCTONION_DIM)
        scale = norms(a) ** 2 * norms(x) * norms(y)
        first = relative_gap(
            mul_coeffs(mul_coeffs(a, x), mul_coeffs(y, a)),
            mul_coeffs(a, mul_coeffs(mul_coeffs(x, y), a)),
            scale,
        )
        second = relative_gap(
            mul_coeffs(a, mul_coeffs(x, mul_coeffs(a, y))),
            mul_coeffs(mul_coeffs(a, mul_coeffs(x, a)), y),
            scale,
        )
        third = relative_gap(
            mul_coeffs(x, mul_coeffs(a, mul_coeffs(y, a))),
            mul_coeffs(mul_coeffs(mul_coeffs(x, a), y), a),
            scale,
        )
        return max(first, second, third)


class ArtinTwoGenerator(PropertyCheck):
    """Elements of the subalgebra generated by two octonions associate."""

    name = "artin_two_generator"
    suite = SUITE

    def evaluate(self, trials: int, rng: np.random.Generator) -> float:
        x, y = gaussian(rng, 2, trials, OCTONION_DIM)
        xy, yx, xx = mul_coeffs(x, y), mul_coeffs(y, x), mul_coeffs(x, x)
        triples = ((x, y, xx), (xy, yx, xx), (y, xx, x), (xy, y, x))
        return max(
            relative_gap(_associator(p, q, r), 0.0, norms(p) * norms(q) * norms(r))
            for p, q, r in triples
        )


CHECKS: tuple[type[PropertyCheck], ...] = (
    AlternativeLaws,
    ArtinTwoGenerator,
    CayleyDicksonAgreement,
    CompositionLaw,
    ConjugationAntiAutomorphism,
    ConjugationIdentities,
    InnerProductScaling,
    InverseIdentity,
    MoufangIdentities,
    NonAssociativityWitness,
    RankEquation,
    RelationTable,
    SubalgebraConsistency,
)
