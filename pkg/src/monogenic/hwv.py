"""Highest weight vectors in the third cohomology, tested and completed exactly.

A section is a highest weight vector when its class is nonzero and every
positive simple raising (A12, E12, E23, E34) sends it to a class-zero section;
class vanishing is decided through the transform.

Completion: the weight of the sought vector pins a finite monomial candidate
space (z0 degree at most l, pole orders determined by the row sums), and the
raising conditions become an exact linear system over it.  The solution is
unique only at the level of classes: the candidate space contains combinations
whose class and whose raised classes all vanish.  The solver therefore
quotients by that trivial subspace and returns the canonical representative
with zeros in its pivot coordinates, normalized so the designated leading
monomial z0^l z11^(a+b) z22^a / (zeta1 zeta2 zeta3) has coefficient one.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator

from .charts import TWISTOR, ZETA_VARS
from .cochain import POSITIVE_SIMPLE_ROOTS, CochainSection, g0_action
from .laurent import (
    Exponents,
    InternalCheckError,
    LaurentPoly,
    PreconditionError,
    exact_nullspace,
    rref,
)
from .transform import SpinorField, class_is_zero, penrose_transform


def hwv_test(section: CochainSection) -> bool:
    """Nonzero class annihilated (as a class) by all positive simple raisings."""
    if class_is_zero(section):
        return False
    return all(
        class_is_zero(g0_action(root, section)) for root in POSITIVE_SIMPLE_ROOTS
    )


def _compositions3(total: int) -> Iterator[tuple[int, int, int]]:
    for first in range(total + 1):
        for second in range(total - first + 1):
            yield (first, second, total - first - second)


def candidate_exponents(a: int, b: int, l: int) -> list[Exponents]:
    """Monomial exponent vectors sharing the weight of the (a, b, l) leading term.

    For z0 degree s0 = l - t the z degree is 2a + b + 2t with column sums
    (a+b+t, a+t), and the pole orders are then forced by the row sums:
    r = (a+b+1+t-s1, a+1+t-s2, 1+t-s3).
    """
    idx = TWISTOR.index
    out = []
    for s0 in range(l, -1, -1):
        t = l - s0
        for col1 in _compositions3(a + b + t):
            for col2 in _compositions3(a + t):
                rows = [col1[i] + col2[i] for i in range(3)]
                poles = (a + b + 1 + t - rows[0], a + 1 + t - rows[1], 1 + t - rows[2])
                exps = [0] * len(TWISTOR)
                exps[idx["z0"]] = s0
                for i in range(3):
                    exps[idx[f"z{i + 1}1"]] = col1[i]
                    exps[idx[f"z{i + 1}2"]] = col2[i]
                for name, r in zip(ZETA_VARS, poles):
                    exps[idx[name]] = -r
                out.append(tuple(exps))
    return sorted(set(out))


def _stacked_rows(per_candidate: list[list[SpinorField]]) -> list[list[Fraction]]:
    """Coefficient matrix of a tuple of spinor fields per candidate (exact)."""
    coords: set[tuple[int, int, Exponents]] = set()
    for fields in per_candidate:
        for slot, field in enumerate(fields):
            for m, p in enumerate(field.components):
                coords.update((slot, m, e) for e in p.terms)
    ordered = sorted(coords)
    return [
        [fields[slot].components[m].coefficient(e) for fields in per_candidate]
        for (slot, m, e) in ordered
    ]


def hwv_complete(label: tuple[int, int, int]) -> CochainSection:
    """The canonical highest weight vector with leading term z0^l D^a z11^b/(zzz).

    Raises InternalCheckError if the linear system fails to have a unique
    class-level solution (which would falsify the uniqueness statement the
    construction relies on).
    """
    a, b, l = label
    if min(a, b, l) < 0:
        raise PreconditionError("label entries must be non-negative")

    exponents = candidate_exponents(a, b, l)
    candidates = [
        CochainSection(LaurentPoly.from_dict(TWISTOR, {e: 1})) for e in exponents
    ]

    raised_images = [
        [penrose_transform(g0_action(root, cand)) for root in POSITIVE_SIMPLE_ROOTS]
        for cand in candidates
    ]
    constraint_rows = _stacked_rows(raised_images)
    solutions = exact_nullspace(constraint_rows, n_cols=len(candidates))
    if not solutions:
        raise InternalCheckError(f"no highest weight solution for label {label}")

    images = [[penrose_transform(cand)] for cand in candidates]
    image_rows = _stacked_rows(images)

    def image_of(vector: list[Fraction]) -> list[Fraction]:
        return [
            sum((row[c] * vector[c] for c in range(len(vector)) if vector[c]), Fraction(0))
            for row in image_rows
        ]

    solution_images = [image_of(sol) for sol in solutions]
    restricted = [
        [solution_images[s][r] for s in range(len(solutions))]
        for r in range(len(image_rows))
    ]
    trivial_in_solution_coords = exact_nullspace(restricted, n_cols=len(solutions))
    if len(solutions) - len(trivial_in_solution_coords) != 1:
        raise InternalCheckError(
            f"label {label}: solution space has class dimension "
            f"{len(solutions) - len(trivial_in_solution_coords)}, expected 1"
        )

    trivial_vectors = [
        [
            sum((coeffs[s] * solutions[s][c] for s in range(len(solutions))), Fraction(0))
            for c in range(len(candidates))
        ]
        for coeffs in trivial_in_solution_coords
    ]
    reduced_trivial, trivial_pivots = (
        rref(trivial_vectors, len(candidates)) if trivial_vectors else ([], [])
    )

    representative = None
    for sol, sol_image in zip(solutions, solution_images):
        if any(sol_image):
            representative = list(sol)
            break
    if representative is None:
        raise InternalCheckError(f"label {label}: all solutions have zero class")

    for row, pivot in zip(reduced_trivial, trivial_pivots):
        factor = representative[pivot]
        if factor:
            representative = [v - factor * w for v, w in zip(representative, row)]

    lead = [0] * len(TWISTOR)
    lead[TWISTOR.index["z0"]] = l
    lead[TWISTOR.index["z11"]] = a + b
    lead[TWISTOR.index["z22"]] = a
    for name in ZETA_VARS:
        lead[TWISTOR.index[name]] = -1
    lead_exps = tuple(lead)
    lead_coeff = representative[exponents.index(lead_exps)]
    if not lead_coeff:
        raise InternalCheckError(f"label {label}: leading coefficient vanished")
    representative = [v / lead_coeff for v in representative]

    body = LaurentPoly.from_dict(
        TWISTOR,
        {e: c for e, c in zip(exponents, representative) if c},
    )
    section = CochainSection(body)

    # The z0-top part must be exactly Delta^a z11^b/(zeta1 zeta2 zeta3).
    if body.degree_in("z0") != l:
        raise InternalCheckError(f"label {label}: z0 degree is not {l}")
    delta = LaurentPoly.monomial(TWISTOR, {"z11": 1, "z22": 1}) - LaurentPoly.monomial(
        TWISTOR, {"z12": 1, "z21": 1}
    )
    expected_top = (delta ** a) * LaurentPoly.monomial(
        TWISTOR, {"z11": b, "zeta1": -1, "zeta2": -1, "zeta3": -1}
    )
    if body.coefficient_of(("z0",), (l,)) != expected_top:
        raise InternalCheckError(f"label {label}: leading term has the wrong shape")
    return section
