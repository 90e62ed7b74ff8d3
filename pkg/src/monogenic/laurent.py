"""Sparse multivariate Laurent polynomials with exact rational coefficients.

A polynomial is a dictionary mapping exponent vectors to nonzero Fractions.
Exponent vectors are dense tuples of ints, one slot per variable of a fixed
Alphabet, so structural equality of two polynomials is equality of values:

    3/2 * z11^2 * zeta1^-1   ->   {(0, 2, 0, 0, 0, 0, 0, -1, 0, 0): Fraction(3, 2)}

Negative exponents are only legal for variables the alphabet declares
invertible (the zeta/rho chart variables); everything else rejects them at
construction time.  All values are immutable after construction and every
operation is a pure function, so callers may share and parallelize freely.

Rational scalars are `fractions.Fraction` throughout: always in lowest terms,
positive denominator, arbitrary precision.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class AlphabetMismatch(ValueError):
    """Raised when operands live over different variable alphabets."""


class PreconditionError(ValueError):
    """Raised when an operation's documented precondition is violated."""


class InternalCheckError(RuntimeError):
    """Raised when a computation falsifies an invariant the theory guarantees."""


Exponents = tuple  # tuple[int, ...], one entry per alphabet variable
Scalar = int | Fraction


class Alphabet:
    """An ordered, fixed set of variable names with an invertibility mask."""

    __slots__ = ("names", "negatives", "index")

    def __init__(self, names: Iterable[str], negatives: Iterable[str] = ()):
        self.names = tuple(names)
        self.negatives = frozenset(negatives)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names: {self.names}")
        unknown = self.negatives - set(self.names)
        if unknown:
            raise ValueError(f"invertible variables not in alphabet: {sorted(unknown)}")
        self.index = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Alphabet)
            and self.names == other.names
            and self.negatives == other.negatives
        )

    def __hash__(self) -> int:
        return hash((self.names, self.negatives))

    def __repr__(self) -> str:
        return f"Alphabet({self.names!r})"

    def zero_exponents(self) -> Exponents:
        return (0,) * len(self.names)

    def check_exponents(self, exps: Exponents) -> None:
        if len(exps) != len(self.names):
            raise ValueError(f"exponent vector of length {len(exps)}, expected {len(self.names)}")
        for name, e in zip(self.names, exps):
            if e < 0 and name not in self.negatives:
                raise PreconditionError(f"negative exponent on non-invertible variable {name!r}")


def grlex_key(exps: Exponents):
    """Graded-lexicographic sort key (total grade first, then the vector)."""
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable sparse Laurent polynomial over a fixed alphabet.

    `terms` never stores zero coefficients, so two equal polynomials are
    structurally equal dictionaries (canonical form).
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Exponents, Fraction]):
        # Trusted path: callers inside this module pass canonical dicts.
        self.alphabet = alphabet
        self.terms = dict(terms)

    # ------------------------------------------------------------------ build
    @classmethod
    def from_dict(cls, alphabet: Alphabet, terms: Mapping[Exponents, Scalar]) -> "LaurentPoly":
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            alphabet.check_exponents(exps)
            c = Fraction(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        return cls(alphabet, clean)

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "LaurentPoly":
        return cls(alphabet, {})

    @classmethod
    def constant(cls, alphabet: Alphabet, value: Scalar) -> "LaurentPoly":
        c = Fraction(value)
        return cls(alphabet, {alphabet.zero_exponents(): c} if c else {})

    @classmethod
    def variable(cls, alphabet: Alphabet, name: str, power: int = 1) -> "LaurentPoly":
        if name not in alphabet.index:
            raise ValueError(f"unknown variable {name!r}")
        exps = [0] * len(alphabet)
        exps[alphabet.index[name]] = power
        return cls.from_dict(alphabet, {tuple(exps): 1})

    @classmethod
    def monomial(cls, alphabet: Alphabet, powers: Mapping[str, int], coeff: Scalar = 1) -> "LaurentPoly":
        exps = [0] * len(alphabet)
        for name, e in powers.items():
            if name not in alphabet.index:
                raise ValueError(f"unknown variable {name!r}")
            exps[alphabet.index[name]] += e
        return cls.from_dict(alphabet, {tuple(exps): coeff})

    # ------------------------------------------------------------------ query
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sole_term(self) -> tuple[Exponents, Fraction]:
        if len(self.terms) != 1:
            raise PreconditionError(f"expected a monomial, got {len(self.terms)} terms")
        return next(iter(self.terms.items()))

    def coefficient(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def exponent_of(self, name: str, exps: Exponents) -> int:
        return exps[self.alphabet.index[name]]

    def degree_in(self, name: str) -> int:
        """Largest exponent of `name` over all terms (0 for the zero poly)."""
        i = self.alphabet.index[name]
        return max((e[i] for e in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in descending graded-lexicographic order (deterministic)."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # ------------------------------------------------------------- arithmetic
    def _require_same(self, other: "LaurentPoly") -> None:
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(
                f"operands over {self.alphabet.names} vs {other.alphabet.names}"
            )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly(self.alphabet, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.alphabet, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._require_same(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(exps, Fraction(0)) + c1 * c2
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        return LaurentPoly(self.alphabet, out)

    __rmul__ = __mul__

    def scale(self, scalar: Scalar) -> "LaurentPoly":
        c = Fraction(scalar)
        if not c:
            return LaurentPoly.zero(self.alphabet)
        return LaurentPoly(self.alphabet, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise PreconditionError("polynomial powers must be non-negative integers")
        result = LaurentPoly.constant(self.alphabet, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse_monomial(self) -> "LaurentPoly":
        """Exact inverse of a single-term polynomial (exponents negated)."""
        exps, coeff = self.sole_term()
        inv = tuple(-e for e in exps)
        self.alphabet.check_exponents(inv)
        return LaurentPoly(self.alphabet, {inv: Fraction(1) / coeff})

    # ------------------------------------------------------------- operations
    def substitute(
        self,
        bindings: Mapping[str, "LaurentPoly"],
        target: Alphabet | None = None,
    ) -> "LaurentPoly":
        """Compose with `bindings`; unbound variables pass through to `target`.

        A variable appearing with a negative exponent must be bound to an
        invertible monomial (general denominators are out of scope).
        """
        if target is None:
            target = next(iter(bindings.values())).alphabet if bindings else self.alphabet
        for name, value in bindings.items():
            if name not in self.alphabet.index:
                raise ValueError(f"binding for unknown variable {name!r}")
            if value.alphabet != target:
                raise AlphabetMismatch(f"binding for {name!r} is not over the target alphabet")

        values: list[LaurentPoly | None] = [bindings.get(name) for name in self.alphabet.names]

        for name in self.alphabet.names:
            if name not in bindings and name not in target.index:
                # Only an error if the variable actually occurs.
                for exps in self.terms:
                    if exps[self.alphabet.index[name]]:
                        raise PreconditionError(
                            f"variable {name!r} is unbound and missing from the target alphabet"
                        )

        power_cache: dict[tuple[int, int], LaurentPoly] = {}

        def bound_power(i: int, e: int) -> LaurentPoly:
            key = (i, e)
            if key not in power_cache:
                value = values[i]
                assert value is not None
                if e >= 0:
                    power_cache[key] = value ** e
                else:
                    power_cache[key] = value.inverse_monomial() ** (-e)
            return power_cache[key]

        out = LaurentPoly.zero(target)
        for exps, coeff in self.terms.items():
            passthrough = [0] * len(target)
            term = None
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = self.alphabet.names[i]
                if name in bindings:
                    if e < 0 and not bindings[name].is_monomial():
                        raise PreconditionError(
                            f"negative exponent on {name!r} needs an invertible monomial binding"
                        )
                    factor = bound_power(i, e)
                    term = factor if term is None else term * factor
                else:
                    passthrough[target.index[name]] += e
            mono = LaurentPoly.from_dict(target, {tuple(passthrough): coeff})
            out = out + (mono if term is None else mono * term)
        return out

    def coefficient_of(self, names: Iterable[str], exponents: Iterable[int]) -> "LaurentPoly":
        """Coefficient polynomial of the given monomial in the given variables.

        The extracted variables come back with exponent zero; an absent
        coefficient is the zero polynomial.
        """
        names = tuple(names)
        exponents = tuple(exponents)
        if len(set(names)) != len(names):
            raise PreconditionError("extraction variables must be distinct")
        positions = [self.alphabet.index[n] for n in names]
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            if all(exps[p] == e for p, e in zip(positions, exponents)):
                reduced = list(exps)
                for p in positions:
                    reduced[p] = 0
                key = tuple(reduced)
                s = out.get(key, Fraction(0)) + coeff
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return LaurentPoly(self.alphabet, out)

    def derivative(self, name: str) -> "LaurentPoly":
        """Formal partial derivative; negative exponents follow the power rule."""
        i = self.alphabet.index[name]
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            reduced = list(exps)
            reduced[i] = e - 1
            key = tuple(reduced)
            s = out.get(key, Fraction(0)) + coeff * e
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return LaurentPoly(self.alphabet, out)

    def project(self, target: Alphabet) -> "LaurentPoly":
        """Re-express over `target`; variables dropped must have exponent 0."""
        mapping = []
        for i, name in enumerate(self.alphabet.names):
            mapping.append(target.index.get(name))
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(target)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                j = mapping[i]
                if j is None:
                    raise PreconditionError(
                        f"variable {self.alphabet.names[i]!r} occurs but is not in the target"
                    )
                new[j] = e
            out[tuple(new)] = coeff
        return LaurentPoly(target, out)

    # ------------------------------------------------------------------ print
    def to_string(self) -> str:
        """Canonical text form, e.g. ``3/2 * z11^2 * zeta1^-1 - z0``."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for n, (exps, coeff) in enumerate(self.sorted_terms()):
            factors = [
                f"{name}^{e}" if e != 1 else name
                for name, e in zip(self.alphabet.names, exps)
                if e != 0
            ]
            mag = abs(coeff)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = " * ".join(factors)
            if n == 0:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_string()})"


class PolyMatrix:
    """A rectangular matrix of LaurentPoly entries over one alphabet."""

    __slots__ = ("alphabet", "entries")

    def __init__(self, alphabet: Alphabet, entries: list[list[LaurentPoly]]):
        self.alphabet = alphabet
        widths = {len(row) for row in entries}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        for row in entries:
            for p in row:
                if p.alphabet != alphabet:
                    raise AlphabetMismatch("matrix entries over mixed alphabets")
        self.entries = [list(row) for row in entries]

    @classmethod
    def from_scalars(cls, alphabet: Alphabet, rows: list[list[Scalar]]) -> "PolyMatrix":
        return cls(
            alphabet,
            [[LaurentPoly.constant(alphabet, v) for v in row] for row in rows],
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, pos: tuple[int, int]) -> LaurentPoly:
        return self.entries[pos[0]][pos[1]]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.alphabet == other.alphabet
            and self.entries == other.entries
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.alphabet,
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)],
        )

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.alphabet,
            [
                [self.entries[r][c] + other.entries[r][c] for c in range(self.cols)]
                for r in range(self.rows)
            ],
        )

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + other.scale(-1)

    def scale(self, scalar: Scalar) -> "PolyMatrix":
        return PolyMatrix(
            self.alphabet, [[p.scale(scalar) for p in row] for row in self.entries]
        )

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = LaurentPoly.zero(self.alphabet)
        out = []
        for r in range(self.rows):
            row = []
            for c in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[r][k] * other.entries[k][c]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.alphabet, out)

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)


# ------------------------------------------------------------- exact nullspace
def _integerize(row: list[Scalar]) -> list[int]:
    fracs = [Fraction(v) for v in row]
    lcm = 1
    for f in fracs:
        d = f.denominator
        g = _gcd(lcm, d)
        lcm = lcm // g * d
    return [int(f * lcm) for f in fracs]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _bareiss_echelon(rows: list[list[Scalar]], n_cols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free (Bareiss) row echelon form; returns (matrix, pivot columns)."""
    m = [_integerize(row) for row in rows]
    n_rows = len(m)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        if r >= n_rows:
            break
        best = None
        for i in range(r, n_rows):
            v = m[i][c]
            if v and (best is None or abs(v) < abs(m[best][c])):
                best = i
        if best is None:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        for i in range(r + 1, n_rows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for k in range(c, n_cols):
                row_i[k] = (piv * row_i[k] - mic * row_r[k]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots


def matrix_rank(rows: list[list[Scalar]], n_cols: int | None = None) -> int:
    """Exact rank of a rational matrix via fraction-free elimination."""
    if not rows:
        return 0
    if n_cols is None:
        n_cols = len(rows[0])
    _, pivots = _bareiss_echelon(rows, n_cols)
    return len(pivots)


def exact_nullspace(rows: list[list[Scalar]], n_cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the exact right nullspace of a rational matrix.

    Returns one vector per free column (so the basis is linearly independent
    and its length is the exact nullity).  An empty `rows` list means the map
    is zero and the whole space comes back.
    """
    if n_cols is None:
        if not rows:
            raise ValueError("cannot infer the column count of an empty matrix")
        n_cols = len(rows[0])
    if not rows:
        return [
            [Fraction(1) if j == i else Fraction(0) for j in range(n_cols)]
            for i in range(n_cols)
        ]
    m, pivots = _bareiss_echelon(rows, n_cols)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis: list[list[Fraction]] = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = Fraction(0)
            for c in range(pc + 1, n_cols):
                if v[c]:
                    s += Fraction(m[r][c]) * v[c]
            v[pc] = -s / m[r][pc]
        basis.append(v)
    return basis


def rref(rows: list[list[Fraction]], n_cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals; returns (matrix, pivot cols)."""
    m = [list(map(Fraction, row)) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r >= len(m):
            break
        pivot_row = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots
