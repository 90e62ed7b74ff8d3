"""Irreducible-module bookkeeping for the graded monogenic decomposition.

Degree-k monogenic spinors decompose, multiplicity free, into the modules
labeled by (a, b, l) with 2a + b + 2l = k: the gl(2) factor has highest
weight (5/2 + l + a + b, 5/2 + l + a) and the sl(4) factor (2a+b+1, a+b, a, 0).
Dimensions come from the classical formulas in exact rational arithmetic and
cross-validate the nullspace route through the operator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochain import CochainSection, Weight, weight_of_monomial
from .laurent import InternalCheckError, LaurentPoly, PreconditionError, Scalar
from .charts import TWISTOR, ZETA_VARS


@dataclass(frozen=True)
class IrrepLabel:
    """A summand label; the weighted degree of the summand is 2a + b + 2l."""

    a: int
    b: int
    l: int

    def __post_init__(self):
        if min(self.a, self.b, self.l) < 0:
            raise PreconditionError("label entries must be non-negative")

    @property
    def degree(self) -> int:
        return 2 * self.a + self.b + 2 * self.l


@dataclass(frozen=True)
class ModuleDescriptor:
    gl2_weight: tuple[Fraction, Fraction]
    sl4_weight: tuple[int, int, int, int]
    dimension: int


def dim_gl2(weight: tuple[Scalar, Scalar]) -> int:
    """Dimension of the gl(2) irrep with the given dominant weight pair."""
    w1, w2 = Fraction(weight[0]), Fraction(weight[1])
    if w1 < w2:
        raise PreconditionError(f"gl(2) weight {weight} is not dominant")
    diff = w1 - w2
    if diff.denominator != 1:
        raise PreconditionError(f"gl(2) weight difference {diff} is not integral")
    return int(diff) + 1


def dim_sl4(weight: tuple[int, int, int, int]) -> int:
    """Weyl dimension of the sl(4) irrep with weakly decreasing weight."""
    if any(weight[i] < weight[i + 1] for i in range(3)):
        raise PreconditionError(f"sl(4) weight {weight} is not weakly decreasing")
    p = weight[0] - weight[1]
    q = weight[1] - weight[2]
    r = weight[2] - weight[3]
    value = (
        Fraction(1 + p)
        * (1 + q)
        * (1 + r)
        * (1 + Fraction(p + q, 2))
        * (1 + Fraction(q + r, 2))
        * (1 + Fraction(p + q + r, 3))
    )
    if value.denominator != 1:
        raise InternalCheckError(f"Weyl product for {weight} is not integral: {value}")
    return int(value)


def module_descriptor(label: IrrepLabel) -> ModuleDescriptor:
    half5 = Fraction(5, 2)
    gl2 = (half5 + label.l + label.a + label.b, half5 + label.l + label.a)
    sl4 = (2 * label.a + label.b + 1, label.a + label.b, label.a, 0)
    return ModuleDescriptor(
        gl2_weight=gl2,
        sl4_weight=sl4,
        dimension=dim_gl2(gl2) * dim_sl4(sl4),
    )


def decompose_Mk(k: int) -> list[tuple[IrrepLabel, ModuleDescriptor]]:
    """All summands of the degree-k monogenic space, sorted by (l, a, b)."""
    if k < 0:
        raise PreconditionError("degree must be non-negative")
    labels = [
        IrrepLabel(a, b, l)
        for l in range(k // 2 + 1)
        for a in range((k - 2 * l) // 2 + 1)
        for b in (k - 2 * l - 2 * a,)
    ]
    labels.sort(key=lambda lab: (lab.l, lab.a, lab.b))
    return [(lab, module_descriptor(lab)) for lab in labels]


def multiplicity_free_check(k_max: int) -> bool:
    """True iff all summand weight pairs up to degree k_max are distinct."""
    if k_max < 0:
        raise PreconditionError("degree must be non-negative")
    seen: set[tuple] = set()
    for k in range(k_max + 1):
        for _, desc in decompose_Mk(k):
            key = (desc.gl2_weight, _normalize_sl4(desc.sl4_weight))
            if key in seen:
                return False
            seen.add(key)
    return True


def _normalize_sl4(weight: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    base = weight[3]
    return tuple(v - base for v in weight)


def label_of_hwv(section: CochainSection) -> IrrepLabel:
    """Read (a, b, l) off the leading z0-term of a highest weight vector."""
    body = section.body
    if body.is_zero():
        raise PreconditionError("the zero section is not a highest weight vector")
    l = body.degree_in("z0")
    top = body.coefficient_of(("z0",), (l,))
    idx = TWISTOR.index
    for exps in top.terms:
        if any(exps[idx[name]] != -1 for name in ZETA_VARS):
            raise PreconditionError("leading z0-term does not have simple poles (1,1,1)")
    a = top.degree_in("z22")
    b = top.degree_in("z11") - a
    if b < 0:
        raise PreconditionError("leading z0-term is not of the determinant-power shape")
    delta = LaurentPoly.monomial(TWISTOR, {"z11": 1, "z22": 1}) - LaurentPoly.monomial(
        TWISTOR, {"z12": 1, "z21": 1}
    )
    pattern = (delta ** a) * LaurentPoly.monomial(
        TWISTOR, {"z11": b, "zeta1": -1, "zeta2": -1, "zeta3": -1}
    )
    lead_key = LaurentPoly.monomial(
        TWISTOR, {"z0": l, "z11": a + b, "z22": a, "zeta1": -1, "zeta2": -1, "zeta3": -1}
    ).sole_term()[0]
    scale = body.coefficient(lead_key)
    if scale == 0 or top != pattern.scale(scale):
        raise PreconditionError("leading z0-term is not of the determinant-power shape")

    label = IrrepLabel(a, b, l)
    descriptor = module_descriptor(label)
    lead_weight = weight_of_monomial(
        CochainSection(LaurentPoly.from_dict(TWISTOR, {lead_key: 1}))
    )
    expected = Weight(gl2=descriptor.gl2_weight, gl4=descriptor.sl4_weight)
    if lead_weight.gl2 != expected.gl2 or not lead_weight.same_sl4(expected):
        raise InternalCheckError(
            f"leading-term weight {lead_weight} disagrees with descriptor {descriptor}"
        )
    return label
