"""Multivariate polynomials with exact coefficients under graded reverse
lexicographic (grevlex) term order.

Monomials are dense exponent tuples. Polynomials are immutable term lists
sorted strictly descending in grevlex, with no zero coefficients; every
operation returns canonical results. The term order is fixed: grevlex with
the first declared variable largest.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    ArityMismatchError,
    BadCoefficientError,
    ContextMismatchError,
    PolyParseError,
    UnknownVariableError,
)
from .fields import Field, Scalar

__all__ = [
    "Monomial",
    "RingContext",
    "Polynomial",
    "mono_degree",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "grevlex_key",
    "grevlex_cmp",
    "parse_polynomial",
]

Monomial = tuple  # dense exponent vector, one entry per variable


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b, entrywise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(m: Monomial):
    """Sort key realizing grevlex: higher total degree wins, ties broken by
    the smallest trailing exponent (largest key) in reversed order."""
    return (sum(m), tuple(-e for e in reversed(m)))


def grevlex_cmp(a: Monomial, b: Monomial) -> int:
    """-1, 0, or 1 as a <, ==, > b in grevlex."""
    if len(a) != len(b):
        raise ArityMismatchError(f"cannot compare monomials of arity {len(a)} and {len(b)}")
    ka, kb = grevlex_key(a), grevlex_key(b)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring: a coefficient field plus ordered variable names."""

    field: Field
    var_names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.var_names)) != len(self.var_names):
            raise ContextMismatchError(f"duplicate variable names in {self.var_names}")

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def variable(self, i: int) -> "Polynomial":
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, ((exps, self.field.one),))

    def constant(self, c: Scalar) -> "Polynomial":
        c = self.field.canon(c)
        if not c:
            return Polynomial(self, ())
        return Polynomial(self, ((self.unit_monomial(), c),))

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)


class Polynomial:
    """Immutable polynomial: terms sorted strictly descending in grevlex."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Sequence[tuple[Monomial, Scalar]]):
        terms = tuple(terms)
        if __debug__:
            keys = [grevlex_key(m) for m, _ in terms]
            assert all(keys[i] > keys[i + 1] for i in range(len(keys) - 1)), "terms out of order"
            assert all(c == ctx.field.canon(c) and c for _, c in terms), "non-canonical term"
            assert all(len(m) == ctx.nvars for m, _ in terms), "wrong monomial arity"
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_dict(cls, ctx: RingContext, coeffs: dict) -> "Polynomial":
        """Build from {monomial: coefficient}, dropping zeros and sorting."""
        field = ctx.field
        items = [(m, field.canon(c)) for m, c in coeffs.items()]
        items = [(m, c) for m, c in items if c]
        items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
        return cls(ctx, items)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        """A single term (any coefficient)."""
        return len(self.terms) == 1

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> Scalar:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {mono_degree(m) for m, _ in self.terms}
        return len(degrees) <= 1

    def coefficient(self, m: Monomial) -> Scalar:
        for mono, c in self.terms:
            if mono == m:
                return c
        return self.ctx.field.zero

    def __iter__(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ctx != other.ctx:
            raise ContextMismatchError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        field = self.ctx.field
        for m, c in other.terms:
            acc[m] = field.add(acc.get(m, field.zero), c)
        return Polynomial.from_dict(self.ctx, acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        field = self.ctx.field
        for m, c in other.terms:
            acc[m] = field.sub(acc.get(m, field.zero), c)
        return Polynomial.from_dict(self.ctx, acc)

    def __neg__(self) -> "Polynomial":
        field = self.ctx.field
        return Polynomial(self.ctx, tuple((m, field.neg(c)) for m, c in self.terms))

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        field = self.ctx.field
        acc: dict = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                prod = field.mul(ca, cb)
                if m in acc:
                    acc[m] = field.add(acc[m], prod)
                else:
                    acc[m] = prod
        return Polynomial.from_dict(self.ctx, acc)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def scale(self, c: Scalar) -> "Polynomial":
        field = self.ctx.field
        c = field.canon(c)
        if not c:
            return Polynomial(self.ctx, ())
        return Polynomial(self.ctx, tuple((m, field.mul(k, c)) for m, k in self.terms))

    def term_multiple(self, m: Monomial, c: Scalar) -> "Polynomial":
        """Multiply by the single term c * x^m (used by division loops)."""
        field = self.ctx.field
        c = field.canon(c)
        if not c:
            return Polynomial(self.ctx, ())
        return Polynomial(self.ctx, tuple((mono_mul(mm, m), field.mul(k, c)) for mm, k in self.terms))

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ctx.one()
        for _ in range(e):
            result = result * self
        return result

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient; zero stays zero."""
        if not self.terms:
            return self
        lead = self.terms[0][1]
        field = self.ctx.field
        if lead == field.one:
            return self
        inv = field.inv(lead)
        return Polynomial(self.ctx, tuple((m, field.mul(c, inv)) for m, c in self.terms))

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.ctx, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    # -- printing ---------------------------------------------------------

    def _monomial_str(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.ctx.var_names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        field = self.ctx.field
        chunks: list[str] = []
        for i, (m, c) in enumerate(self.terms):
            negative = field.characteristic == 0 and c < 0
            mag = -c if negative else c
            mono = self._monomial_str(m)
            if not mono:
                body = str(mag)
            elif mag == field.one:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if i == 0:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# -- parsing ---------------------------------------------------------------

_OPS = set("+-*^/()")


class _Parser:
    """Recursive-descent parser for the expression grammar:

    expression ::= term (('+'|'-') term)*
    term       ::= factor ('*' factor)*
    factor     ::= coefficient | variable ('^' natural)? | '(' expression ')' | '-' factor
    coefficient ::= integer | integer '/' positive-integer

    No implicit multiplication; '^' binds tighter than '*'.
    """

    def __init__(self, source: str, ctx: RingContext):
        self.source = source
        self.ctx = ctx
        self.tokens = self._tokenize(source)
        self.pos = 0

    @staticmethod
    def _tokenize(source: str) -> list[tuple[str, str, int]]:
        tokens = []
        i = 0
        while i < len(source):
            ch = source[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < len(source) and source[j].isdigit():
                    j += 1
                tokens.append(("INT", source[i:j], i))
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < len(source) and (source[j].isalnum() or source[j] == "_"):
                    j += 1
                tokens.append(("NAME", source[i:j], i))
                i = j
            elif ch in _OPS:
                tokens.append((ch, ch, i))
                i += 1
            else:
                raise PolyParseError(f"unexpected character {ch!r}", i)
        tokens.append(("END", "", len(source)))
        return tokens

    def _peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def _next(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        result = self.expression()
        kind, text, pos = self._peek()
        if kind != "END":
            raise PolyParseError(f"unexpected {text!r}", pos)
        return result

    def expression(self) -> Polynomial:
        result = self.term()
        while self._peek()[0] in ("+", "-"):
            op = self._next()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> Polynomial:
        result = self.factor()
        while self._peek()[0] == "*":
            self._next()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        kind, text, pos = self._peek()
        if kind == "-":
            self._next()
            return -self.factor()
        if kind == "INT":
            self._next()
            numerator = int(text)
            if self._peek()[0] == "/":
                self._next()
                dkind, dtext, dpos = self._next()
                if dkind != "INT":
                    raise PolyParseError("expected integer denominator", dpos)
                if int(dtext) == 0:
                    raise BadCoefficientError("zero denominator", dpos)
                try:
                    coeff = self.ctx.field.literal(numerator, int(dtext))
                except BadCoefficientError:
                    raise BadCoefficientError(
                        f"fraction literal not allowed over {self.ctx.field.name}", pos
                    ) from None
            else:
                coeff = self.ctx.field.literal(numerator)
            return self.ctx.constant(coeff)
        if kind == "NAME":
            self._next()
            if text not in self.ctx.var_names:
                raise UnknownVariableError(text, pos)
            index = self.ctx.var_names.index(text)
            exponent = 1
            if self._peek()[0] == "^":
                self._next()
                ekind, etext, epos = self._next()
                if ekind != "INT":
                    raise PolyParseError("expected integer exponent", epos)
                exponent = int(etext)
            exps = tuple(exponent if j == index else 0 for j in range(self.ctx.nvars))
            return Polynomial.from_dict(self.ctx, {exps: self.ctx.field.one})
        if kind == "(":
            self._next()
            inner = self.expression()
            ckind, _, cpos = self._next()
            if ckind != ")":
                raise PolyParseError("expected ')'", cpos)
            return inner
        raise PolyParseError(f"unexpected {text or 'end of input'!r}", pos)


def parse_polynomial(source: str, ctx: RingContext) -> Polynomial:
    """Parse a polynomial source string in the given ring."""
    return _Parser(source, ctx).parse()
