"""Text expressions for sections and spinors.

Grammar (whitespace insensitive):

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := rational ('*' factor)*  |  factor ('*' factor)*
    rational := integer ['/' positive-integer]
    factor   := ident ['^' ['-'] integer]

Identifiers come from the documented alphabets: sections use z0, z11..z32 and
zeta1..zeta3 (only the zetas may carry negative exponents); spinor components
use x12, x1_11..x1_32, x2_11..x2_32 with no negative exponents.  Parse errors
carry the offending position.  Printing is deterministic: terms in descending
graded-lexicographic order of their exponent vectors, signs absorbed into the
separators, so print/parse round-trips are exact.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction

from .charts import BASE, TWISTOR, ZETA_VARS
from .cochain import CochainSection
from .laurent import Alphabet, LaurentPoly
from .transform import SpinorField


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Context(enum.Enum):
    SECTION = "section"
    SPINOR = "spinor"

    @property
    def alphabet(self) -> Alphabet:
        return TWISTOR if self is Context.SECTION else BASE


@dataclass(frozen=True)
class Term:
    coefficient: Fraction
    powers: tuple[tuple[str, int], ...]  # name-sorted, merged, no zero exponents


@dataclass(frozen=True)
class ExprAST:
    """Normalized sum of terms: like monomials merged, zero terms dropped."""

    terms: tuple[Term, ...]


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        if match.lastgroup == "int":
            tokens.append(("int", match.group("int"), match.start("int")))
        elif match.lastgroup == "ident":
            tokens.append(("ident", match.group("ident"), match.start("ident")))
        else:
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, context: Context):
        self.text = text
        self.context = context
        self.tokens = _tokenize(text)
        self.cursor = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.cursor]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def expect(self, kind: str, value: str | None = None) -> tuple[str, str, int]:
        token = self.peek()
        if token[0] != kind or (value is not None and token[1] != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {token[1] or 'end of input'!r}", token[2])
        return self.advance()

    def parse(self) -> ExprAST:
        terms: list[tuple[Fraction, dict[str, int]]] = []
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        terms.append(self.parse_term(sign))
        while True:
            kind, value, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and value in "+-":
                self.advance()
                terms.append(self.parse_term(-1 if value == "-" else 1))
            else:
                raise ParseError(f"expected '+' or '-', found {value!r}", pos)
        return _normalize(terms)

    def parse_term(self, sign: int) -> tuple[Fraction, dict[str, int]]:
        kind, value, pos = self.peek()
        coefficient = Fraction(sign)
        powers: dict[str, int] = {}
        if kind == "int":
            self.advance()
            numerator = int(value)
            if self.peek()[:2] == ("op", "/"):
                self.advance()
                denom_token = self.expect("int")
                if int(denom_token[1]) == 0:
                    raise ParseError("zero denominator", denom_token[2])
                coefficient *= Fraction(numerator, int(denom_token[1]))
            else:
                coefficient *= numerator
        elif kind == "ident":
            name, exponent = self.parse_factor()
            powers[name] = powers.get(name, 0) + exponent
        else:
            raise ParseError(f"expected a term, found {value or 'end of input'!r}", pos)
        while self.peek()[:2] == ("op", "*"):
            self.advance()
            name, exponent = self.parse_factor()
            powers[name] = powers.get(name, 0) + exponent
        return coefficient, powers

    def parse_factor(self) -> tuple[str, int]:
        token = self.expect("ident")
        name, pos = token[1], token[2]
        alphabet = self.context.alphabet
        if name not in alphabet.index:
            raise ParseError(f"unknown identifier {name!r}", pos)
        exponent = 1
        if self.peek()[:2] == ("op", "^"):
            self.advance()
            negative = False
            if self.peek()[:2] == ("op", "-"):
                self.advance()
                negative = True
            exp_token = self.expect("int")
            exponent = -int(exp_token[1]) if negative else int(exp_token[1])
        if exponent < 0:
            if self.context is Context.SPINOR:
                raise ParseError(f"negative exponent on {name!r} in spinor context", pos)
            if name not in ZETA_VARS:
                raise ParseError(f"negative exponent on non-zeta identifier {name!r}", pos)
        return name, exponent


def _normalize(raw_terms: list[tuple[Fraction, dict[str, int]]]) -> ExprAST:
    merged: dict[tuple[tuple[str, int], ...], Fraction] = {}
    for coefficient, powers in raw_terms:
        key = tuple(sorted((n, e) for n, e in powers.items() if e))
        total = merged.get(key, Fraction(0)) + coefficient
        if total:
            merged[key] = total
        else:
            merged.pop(key, None)

    def grade(key: tuple[tuple[str, int], ...]) -> tuple:
        return (sum(e for _, e in key), key)

    ordered = sorted(merged.items(), key=lambda kv: grade(kv[0]), reverse=True)
    return ExprAST(terms=tuple(Term(coefficient=c, powers=k) for k, c in ordered))


def parse_expr(text: str, context: Context) -> ExprAST:
    return _Parser(text, context).parse()


def to_poly(ast: ExprAST, context: Context) -> LaurentPoly:
    alphabet = context.alphabet
    poly = LaurentPoly.zero(alphabet)
    for term in ast.terms:
        poly = poly + LaurentPoly.monomial(alphabet, dict(term.powers), term.coefficient)
    return poly


def parse_section(text: str) -> CochainSection:
    return CochainSection(to_poly(parse_expr(text, Context.SECTION), Context.SECTION))


def parse_spinor_component(text: str) -> LaurentPoly:
    return to_poly(parse_expr(text, Context.SPINOR), Context.SPINOR)


def parse_spinor(text: str) -> SpinorField:
    parts = text.split(";")
    if len(parts) != 4:
        raise ParseError("a spinor needs exactly 4 ';'-separated components", 0)
    return SpinorField(tuple(parse_spinor_component(part) for part in parts))


def format_poly(poly: LaurentPoly) -> str:
    """Canonical grammar-compatible text (see LaurentPoly.to_string)."""
    return poly.to_string()


def format_ast(ast: ExprAST) -> str:
    """Canonical text of a normalized AST; reparses to an equal AST."""
    if not ast.terms:
        return "0"
    pieces = []
    for n, term in enumerate(ast.terms):
        factors = [f"{name}^{e}" if e != 1 else name for name, e in term.powers]
        mag = abs(term.coefficient)
        if not factors or mag != 1:
            factors.insert(0, str(mag))
        body = " * ".join(factors)
        if n == 0:
            pieces.append(body if term.coefficient > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if term.coefficient > 0 else f"- {body}")
    return " ".join(pieces)
