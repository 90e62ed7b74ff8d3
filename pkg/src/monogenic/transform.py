"""The explicit twistor transform: triple residue after the fibre substitution.

For a chart-0 section f the transform substitutes the incidence bindings
(z0, z_ij in terms of the base coordinates and the fibre zetas), multiplies by
the weight vector (1, zeta1, zeta2, zeta3) and extracts the coefficient of
zeta1^-1 zeta2^-1 zeta3^-1 exactly: for Laurent polynomial integrands the
normalized torus integral *is* that coefficient, so no numerics are involved.

Outputs are 4-component polynomial spinor fields on the base cell, graded by
deg(x12) = 2 and deg(x1_ij) = deg(x2_ij) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charts import BASE, CORRESPONDENCE, ZETA_VARS, correspondence_substitution
from .cochain import CochainSection
from .laurent import Exponents, LaurentPoly, PreconditionError, Scalar, exact_nullspace

_X12_SLOT = BASE.index["x12"]


def weighted_degree(exps: Exponents) -> int:
    """Grading on base monomials: x12 counts twice, the linear slots once."""
    return sum(exps) + exps[_X12_SLOT]


@dataclass(frozen=True)
class SpinorField:
    """A 4-tuple of polynomials on the base cell (a spinor-bundle section)."""

    components: tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]

    def __post_init__(self):
        for p in self.components:
            if p.alphabet != BASE:
                raise PreconditionError("spinor components live over the base alphabet")

    @classmethod
    def zero(cls) -> "SpinorField":
        z = LaurentPoly.zero(BASE)
        return cls((z, z, z, z))

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def __add__(self, other: "SpinorField") -> "SpinorField":
        return SpinorField(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "SpinorField") -> "SpinorField":
        return SpinorField(tuple(a - b for a, b in zip(self.components, other.components)))

    def scale(self, scalar: Scalar) -> "SpinorField":
        return SpinorField(tuple(p.scale(scalar) for p in self.components))

    def weighted_degrees(self) -> set[int]:
        return {weighted_degree(e) for p in self.components for e in p.terms}

    def homogeneous_degree(self) -> int | None:
        """The common weighted degree of all terms, or None if mixed/zero."""
        degrees = self.weighted_degrees()
        return degrees.pop() if len(degrees) == 1 else None


_WEIGHT_VECTOR = None


def _weight_vector() -> tuple[LaurentPoly, ...]:
    global _WEIGHT_VECTOR
    if _WEIGHT_VECTOR is None:
        one = LaurentPoly.constant(CORRESPONDENCE, 1)
        _WEIGHT_VECTOR = (one,) + tuple(
            LaurentPoly.variable(CORRESPONDENCE, name) for name in ZETA_VARS
        )
    return _WEIGHT_VECTOR


def penrose_transform(section: CochainSection) -> SpinorField:
    """Transform a finite Laurent section into a polynomial spinor field.

    Component m is the zeta1^-1 zeta2^-1 zeta3^-1 coefficient of the
    substituted section multiplied by the m-th entry of (1, zeta1, zeta2,
    zeta3).  Linear over rational scalars by construction.
    """
    integrand = section.body.substitute(correspondence_substitution(), CORRESPONDENCE)
    components = []
    for weight in _weight_vector():
        residue = (integrand * weight).coefficient_of(ZETA_VARS, (-1, -1, -1))
        components.append(residue.project(BASE))
    return SpinorField(tuple(components))


def class_is_zero(section: CochainSection) -> bool:
    """Cohomological vanishing, tested through the transform isomorphism."""
    return penrose_transform(section).is_zero()


def spinor_coefficient_rows(fields: list[SpinorField]) -> list[list[Fraction]]:
    """Stack spinor fields into an exact coefficient matrix (rows = coordinates)."""
    coords: set[tuple[int, Exponents]] = set()
    for field in fields:
        for m, p in enumerate(field.components):
            coords.update((m, e) for e in p.terms)
    ordered = sorted(coords)
    return [
        [field.components[m].coefficient(e) for field in fields]
        for (m, e) in ordered
    ]


def transform_is_injective_on(sections: list[CochainSection]) -> bool:
    """True iff no nonzero rational combination of the sections has zero image."""
    if not sections:
        return True
    images = [penrose_transform(s) for s in sections]
    rows = spinor_coefficient_rows(images)
    return not exact_nullspace(rows, n_cols=len(sections))
