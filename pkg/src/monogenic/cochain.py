"""Degree-3 cochain representatives on the chart W0 and their g0 structure.

A representative is a Laurent polynomial in (z0, z_ij, zeta_k) whose z
exponents are non-negative and whose zeta exponents are arbitrary integers; a
monomial z0^s0 prod z_ij^s_ij / (zeta1^r1 zeta2^r2 zeta3^r3) is described by
the data (s0, s_ij, r_k).

The reductive action is implemented as a derivation from the coordinate table

    A12: z_i2 -> z_i1
    E23: zeta1 -> -zeta2,  z_2j -> z_1j        E32: zeta2 -> -zeta1,  z_1j -> z_2j
    E34: zeta2 -> -zeta3,  z_3j -> z_2j        E43: zeta3 -> -zeta2,  z_2j -> z_3j
    E21: zeta1 -> 1
    E12: z_1j -> -zeta2 z_2j - zeta3 z_3j,  z0 -> z22 z31 - z21 z32,
         zeta1 -> zeta1^2,  v -> zeta1 v  for v in {zeta2, zeta3, z_2j, z_3j}

with every unlisted derivative zero, plus the line-bundle twist 5*zeta1*f on
each E12 application.  The E12/zeta1 entry is forced by the raising-chain
coefficients and by the highest-weight completions; see the repository README
for the calibration story.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .charts import TWISTOR, Z_VARS, ZETA_VARS
from .laurent import (
    InternalCheckError,
    LaurentPoly,
    PreconditionError,
    Scalar,
)

POSITIVE_SIMPLE_ROOTS = ("A12", "E12", "E23", "E34")
ROOT_NAMES = ("A12", "E12", "E21", "E23", "E32", "E34", "E43")


@dataclass(frozen=True)
class CochainSection:
    """A rational section on the four-fold chart intersection (trivialized on W0)."""

    body: LaurentPoly

    def __post_init__(self):
        if self.body.alphabet != TWISTOR:
            raise PreconditionError("cochain sections live over the twistor chart alphabet")

    @classmethod
    def zero(cls) -> "CochainSection":
        return cls(LaurentPoly.zero(TWISTOR))

    @classmethod
    def from_terms(cls, terms: Mapping[tuple, Scalar]) -> "CochainSection":
        return cls(LaurentPoly.from_dict(TWISTOR, terms))

    @classmethod
    def monomial(
        cls,
        s0: int = 0,
        z: Mapping[str, int] | None = None,
        poles: tuple[int, int, int] = (0, 0, 0),
        coeff: Scalar = 1,
    ) -> "CochainSection":
        powers = {"z0": s0}
        for name, e in (z or {}).items():
            if name not in Z_VARS:
                raise PreconditionError(f"{name!r} is not a z variable")
            powers[name] = e
        for name, r in zip(ZETA_VARS, poles):
            powers[name] = -r
        return cls(LaurentPoly.monomial(TWISTOR, powers, coeff))

    def __add__(self, other: "CochainSection") -> "CochainSection":
        return CochainSection(self.body + other.body)

    def __sub__(self, other: "CochainSection") -> "CochainSection":
        return CochainSection(self.body - other.body)

    def __neg__(self) -> "CochainSection":
        return CochainSection(-self.body)

    def scale(self, scalar: Scalar) -> "CochainSection":
        return CochainSection(self.body.scale(scalar))

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def is_monomial(self) -> bool:
        return self.body.is_monomial()

    def monomial_data(self) -> tuple[int, dict[str, int], tuple[int, int, int], Fraction]:
        """(s0, {z_ij: s_ij}, (r1, r2, r3), coefficient) of a single monomial."""
        exps, coeff = self.body.sole_term()
        idx = TWISTOR.index
        s0 = exps[idx["z0"]]
        z = {name: exps[idx[name]] for name in Z_VARS if exps[idx[name]]}
        poles = tuple(-exps[idx[name]] for name in ZETA_VARS)
        return s0, z, poles, coeff


@dataclass(frozen=True)
class Weight:
    """A gl(2) (+) gl(4)-style weight; the gl(4) part matters modulo (1,1,1,1)."""

    gl2: tuple[Fraction, Fraction]
    gl4: tuple[int, int, int, int]

    def is_dominant(self) -> bool:
        a, b = self.gl2
        return a >= b and all(
            self.gl4[i] >= self.gl4[i + 1] for i in range(3)
        )

    def gl4_normalized(self) -> tuple[int, int, int, int]:
        last = self.gl4[3]
        return tuple(v - last for v in self.gl4)

    def same_sl4(self, other: "Weight") -> bool:
        return self.gl4_normalized() == other.gl4_normalized()

    def pair(self, gl2_diag: tuple[Scalar, Scalar], sl4_diag: tuple[Scalar, ...]) -> Fraction:
        total = Fraction(0)
        for w, a in zip(self.gl2, gl2_diag):
            total += w * Fraction(a)
        for w, a in zip(self.gl4, sl4_diag):
            total += w * Fraction(a)
        return total


def weight_of_monomial(section: CochainSection) -> Weight:
    """The joint gl(2) (+) gl(4) eigenvalue of a single monomial section."""
    if not section.is_monomial():
        raise PreconditionError("weight_of_monomial expects a single monomial")
    s0, z, (r1, r2, r3), _ = section.monomial_data()
    col = {1: 0, 2: 0}
    row = {1: 0, 2: 0, 3: 0}
    for name, e in z.items():
        row[int(name[1])] += e
        col[int(name[2])] += e
    s = row[1] + row[2] + row[3]
    r = r1 + r2 + r3
    half5 = Fraction(5, 2)
    return Weight(
        gl2=(col[1] + s0 + half5, col[2] + s0 + half5),
        gl4=(5 + s - r, r1 + row[1], r2 + row[2], r3 + row[3]),
    )


# --------------------------------------------------------------- action tables
def _poly(powers: Mapping[str, int], coeff: Scalar = 1) -> LaurentPoly:
    return LaurentPoly.monomial(TWISTOR, powers, coeff)


def _build_tables() -> dict[str, dict[str, LaurentPoly]]:
    tables: dict[str, dict[str, LaurentPoly]] = {
        "A12": {f"z{i}2": _poly({f"z{i}1": 1}) for i in (1, 2, 3)},
        "E23": {"zeta1": _poly({"zeta2": 1}, -1), "z21": _poly({"z11": 1}), "z22": _poly({"z12": 1})},
        "E32": {"zeta2": _poly({"zeta1": 1}, -1), "z11": _poly({"z21": 1}), "z12": _poly({"z22": 1})},
        "E34": {"zeta2": _poly({"zeta3": 1}, -1), "z31": _poly({"z21": 1}), "z32": _poly({"z22": 1})},
        "E43": {"zeta3": _poly({"zeta2": 1}, -1), "z21": _poly({"z31": 1}), "z22": _poly({"z32": 1})},
        "E21": {"zeta1": LaurentPoly.constant(TWISTOR, 1)},
    }
    e12: dict[str, LaurentPoly] = {
        "z0": _poly({"z22": 1, "z31": 1}) - _poly({"z21": 1, "z32": 1}),
        "zeta1": _poly({"zeta1": 2}),
        "zeta2": _poly({"zeta1": 1, "zeta2": 1}),
        "zeta3": _poly({"zeta1": 1, "zeta3": 1}),
    }
    for j in (1, 2):
        e12[f"z1{j}"] = _poly({"zeta2": 1, f"z2{j}": 1}, -1) - _poly({"zeta3": 1, f"z3{j}": 1})
        e12[f"z2{j}"] = _poly({"zeta1": 1, f"z2{j}": 1})
        e12[f"z3{j}"] = _poly({"zeta1": 1, f"z3{j}": 1})
    tables["E12"] = e12
    return tables


_TABLES = _build_tables()
_E12_TWIST = _poly({"zeta1": 1}, 5)


def coordinate_action(root: str, variable: str) -> LaurentPoly:
    """The raw table entry: the derivative of one chart coordinate (no twist)."""
    if root not in ROOT_NAMES:
        raise PreconditionError(f"unknown root {root!r}")
    table = _TABLES[root]
    return table.get(variable, LaurentPoly.zero(TWISTOR))


def g0_action(root: str, section: CochainSection) -> CochainSection:
    """Act by one root on a section: table derivation plus the E12 twist."""
    if root not in ROOT_NAMES:
        raise PreconditionError(f"unknown root {root!r}")
    table = _TABLES[root]
    out = LaurentPoly.zero(TWISTOR)
    for name, value in table.items():
        d = section.body.derivative(name)
        if not d.is_zero():
            out = out + value * d
    if root == "E12":
        out = out + _E12_TWIST * section.body
    return CochainSection(out)


def cartan_action(
    section: CochainSection,
    gl2_diag: tuple[Scalar, Scalar],
    sl4_diag: tuple[Scalar, Scalar, Scalar, Scalar],
) -> CochainSection:
    """Act by a diagonal (Cartan) element; the gl(4) part must be traceless.

    Derived from the same frame normalization as the root table: z_ij scales
    by a1 + a_{i+1} + alpha_j, z0 by alpha1 + alpha2, zeta_k by
    2 a1 + (sum of the two a's other than a_{k+1}), and the bundle twist
    contributes 5 a1 + 5/2 (alpha1 + alpha2).
    """
    a = tuple(Fraction(v) for v in sl4_diag)
    al = tuple(Fraction(v) for v in gl2_diag)
    if sum(a) != 0:
        raise PreconditionError("the gl(4) diagonal must be traceless")
    coeff = {
        "z0": al[0] + al[1],
        "zeta1": 2 * a[0] + a[2] + a[3],
        "zeta2": 2 * a[0] + a[1] + a[3],
        "zeta3": 2 * a[0] + a[1] + a[2],
    }
    for i in (1, 2, 3):
        for j in (1, 2):
            coeff[f"z{i}{j}"] = a[0] + a[i] + al[j - 1]
    out = LaurentPoly.zero(TWISTOR)
    for name, c in coeff.items():
        if c:
            d = section.body.derivative(name)
            if not d.is_zero():
                out = out + (LaurentPoly.variable(TWISTOR, name) * d).scale(c)
    twist = 5 * a[0] + Fraction(5, 2) * (al[0] + al[1])
    if twist:
        out = out + section.body.scale(twist)
    return CochainSection(out)


# ------------------------------------------------------ triviality certificate
class Certificate(enum.Enum):
    TRIVIAL_NEGATIVE_POLE = "TrivialNegativePole"
    TRIVIAL_EXTENDS = "TrivialExtends"
    INCONCLUSIVE = "Inconclusive"


def triviality_certificate(section: CochainSection) -> Certificate:
    """Syntactic sufficient conditions for a monomial class to vanish.

    The TrivialExtends branch is advisory only: the inequality is kept exactly
    as stated even though it is not a reliable vanishing test (class_is_zero
    via the transform is authoritative).
    """
    if not section.is_monomial():
        raise PreconditionError("triviality_certificate expects a single monomial")
    s0, z, poles, _ = section.monomial_data()
    if any(r < 0 for r in poles):
        return Certificate.TRIVIAL_NEGATIVE_POLE
    if 5 + s0 + sum(z.values()) > sum(poles):
        return Certificate.TRIVIAL_EXTENDS
    return Certificate.INCONCLUSIVE


# --------------------------------------------------------------- raising chain
def _chain_coefficient(section: CochainSection, z: dict[str, int], poles: tuple[int, int, int]) -> Fraction:
    powers = dict(z)
    for name, r in zip(ZETA_VARS, poles):
        powers[name] = -r
    target = LaurentPoly.monomial(TWISTOR, powers).sole_term()[0]
    return section.body.coefficient(target)


def raising_chain(section: CochainSection) -> tuple[CochainSection, tuple[Fraction, Fraction, Fraction]]:
    """Apply E12^(r-3) E23^(r2+r3-2) E34^(r3-1) to a dominant monomial.

    Returns the chained section together with the scalars (A, B, C): the
    coefficients of the leading monomial after each stage, i.e. at poles
    (r1, r2+r3-1, 1), (r1+r2+r3-2, 1, 1) and (1, 1, 1) with the z part fixed.
    C != 0 is asserted (dominance guarantees it).
    """
    if not section.is_monomial():
        raise PreconditionError("raising_chain expects a single monomial")
    s0, z, (r1, r2, r3), coeff = section.monomial_data()
    if s0 != 0:
        raise PreconditionError("raising_chain requires s0 = 0")
    if min(r1, r2, r3) < 1:
        raise PreconditionError("raising_chain requires all pole orders >= 1")
    if not weight_of_monomial(section).is_dominant():
        raise PreconditionError("raising_chain requires a dominant weight")

    current = section
    for _ in range(r3 - 1):
        current = g0_action("E34", current)
    a = _chain_coefficient(current, z, (r1, r2 + r3 - 1, 1)) / coeff
    for _ in range(r2 + r3 - 2):
        current = g0_action("E23", current)
    b = _chain_coefficient(current, z, (r1 + r2 + r3 - 2, 1, 1)) / coeff
    for _ in range(r1 + r2 + r3 - 3):
        current = g0_action("E12", current)
    c = _chain_coefficient(current, z, (1, 1, 1)) / coeff
    if c == 0:
        raise InternalCheckError("raising chain produced a vanishing leading coefficient")
    return current, (a, b, c)
