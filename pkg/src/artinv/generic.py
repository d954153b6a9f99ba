"""Exact linear algebra with entries polynomial in formal parameters.

Answers "what is the rank for a generic choice of coefficients" without
floating point or randomness: entries live in Q[c_1..c_m], elimination is
fraction free, and a nonzero polynomial certifies a generically nonzero
entry.  Specializing the parameters recovers ordinary rational matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import ArityMismatchError, InternalInvariantError

Monomial = tuple[int, ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


@dataclass(frozen=True)
class CoeffPoly:
    """Polynomial in formal parameters c_1..c_arity with rational coefficients.

    Terms are kept in descending lexicographic order with no zero
    coefficients, so equal polynomials compare and hash equal.
    """

    arity: int
    terms: tuple[tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, arity: int, coeffs: dict) -> "CoeffPoly":
        cleaned = []
        for mono, c in coeffs.items():
            c = Fraction(c)
            if c:
                cleaned.append((tuple(mono), c))
        cleaned.sort(reverse=True)
        return cls(arity, tuple(cleaned))

    @classmethod
    def zero(cls, arity: int) -> "CoeffPoly":
        return cls(arity, ())

    @classmethod
    def constant(cls, arity: int, value) -> "CoeffPoly":
        return cls.from_dict(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def one(cls, arity: int) -> "CoeffPoly":
        return cls.constant(arity, 1)

    @classmethod
    def parameter(cls, arity: int, i: int) -> "CoeffPoly":
        mono = tuple(1 if k == i else 0 for k in range(arity))
        return cls(arity, ((mono, Fraction(1)),))

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def leading(self) -> tuple[Monomial, Fraction]:
        return self.terms[0]

    def _check(self, other: "CoeffPoly"):
        if self.arity != other.arity:
            raise ArityMismatchError(
                f"parameter polynomials of arity {self.arity} and {other.arity}")

    def __add__(self, other: "CoeffPoly") -> "CoeffPoly":
        self._check(other)
        acc = dict(self.terms)
        for mono, c in other.terms:
            acc[mono] = acc.get(mono, Fraction(0)) + c
        return CoeffPoly.from_dict(self.arity, acc)

    def __sub__(self, other: "CoeffPoly") -> "CoeffPoly":
        return self + (-other)

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly(self.arity, tuple((m, -c) for m, c in self.terms))

    def __mul__(self, other: "CoeffPoly") -> "CoeffPoly":
        self._check(other)
        acc: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                mono = _mono_mul(ma, mb)
                acc[mono] = acc.get(mono, Fraction(0)) + ca * cb
        return CoeffPoly.from_dict(self.arity, acc)

    def scale(self, factor) -> "CoeffPoly":
        factor = Fraction(factor)
        if not factor:
            return CoeffPoly.zero(self.arity)
        return CoeffPoly(self.arity, tuple((m, c * factor) for m, c in self.terms))

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        if len(values) != self.arity:
            raise ArityMismatchError(
                f"expected {self.arity} parameter values, got {len(values)}")
        total = Fraction(0)
        for mono, c in self.terms:
            part = c
            for v, e in zip(values, mono):
                if e:
                    part *= Fraction(v) ** e
            total += part
        return total

    def exact_div(self, divisor: "CoeffPoly") -> "CoeffPoly":
        """Quotient self / divisor when the division has no remainder."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quotient: dict[Monomial, Fraction] = {}
        rem = dict(self.terms)
        dm, dc = divisor.leading()
        while rem:
            mono = max(rem)
            if not _mono_divides(dm, mono):
                raise InternalInvariantError(
                    "inexact polynomial division during fraction-free elimination")
            q = rem[mono] / dc
            shift = _mono_sub(mono, dm)
            quotient[shift] = q
            for m2, c2 in divisor.terms:
                target = _mono_mul(m2, shift)
                val = rem.get(target, Fraction(0)) - c2 * q
                if val:
                    rem[target] = val
                else:
                    rem.pop(target, None)
        return CoeffPoly.from_dict(self.arity, quotient)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.terms:
            factors = [f"c{i + 1}" + (f"^{e}" if e > 1 else "")
                       for i, e in enumerate(mono) if e]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def generic_combination(mats: Sequence[Sequence[Sequence]]) -> list[list[CoeffPoly]]:
    """The matrix sum_j c_j * mats[j] with one fresh parameter per summand."""
    arity = len(mats)
    if not arity:
        raise ArityMismatchError("need at least one matrix to combine")
    nrows, ncols = len(mats[0]), len(mats[0][0])
    out = []
    for i in range(nrows):
        row = []
        for k in range(ncols):
            acc = {}
            for j, mat in enumerate(mats):
                c = Fraction(mat[i][k])
                if c:
                    mono = tuple(1 if t == j else 0 for t in range(arity))
                    acc[mono] = acc.get(mono, Fraction(0)) + c
            row.append(CoeffPoly.from_dict(arity, acc))
        out.append(row)
    return out


def evaluate_matrix(rows: Sequence[Sequence[CoeffPoly]], values: Sequence[Fraction]):
    return [[entry.evaluate(values) for entry in row] for row in rows]


def _strip_row_content(row: list[CoeffPoly]) -> None:
    nums, dens = [], []
    for entry in row:
        for _, c in entry.terms:
            nums.append(c.numerator)
            dens.append(c.denominator)
    if not nums:
        return
    factor = Fraction(gcd(*nums) if len(nums) > 1 else abs(nums[0]),
                      lcm(*dens) if len(dens) > 1 else dens[0])
    if factor not in (0, 1):
        for i, entry in enumerate(row):
            row[i] = entry.scale(1 / factor)


def generic_rank(rows: Sequence[Sequence[CoeffPoly]]) -> int:
    """Rank over Q(c_1..c_m) via fraction-free (Bareiss) elimination.

    Equals the maximum rank over all rational specializations of the
    parameters; every specialization has rank at most this value.
    """
    mat = [list(r) for r in rows]
    if not mat or not mat[0]:
        return 0
    nrows, ncols = len(mat), len(mat[0])
    arity = mat[0][0].arity
    prev_pivot = CoeffPoly.one(arity)
    rank = 0
    while rank < min(nrows, ncols):
        best = None
        for i in range(rank, nrows):
            for j in range(rank, ncols):
                entry = mat[i][j]
                if entry.is_zero():
                    continue
                key = (entry.num_terms(), entry.total_degree(), i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != rank:
            mat[rank], mat[pi] = mat[pi], mat[rank]
        if pj != rank:
            for row in mat:
                row[rank], row[pj] = row[pj], row[rank]
        pivot = mat[rank][rank]
        for i in range(rank + 1, nrows):
            head = mat[i][rank]
            for j in range(rank + 1, ncols):
                num = mat[i][j] * pivot - head * mat[rank][j]
                mat[i][j] = num.exact_div(prev_pivot)
            mat[i][rank] = CoeffPoly.zero(arity)
            _strip_row_content(mat[i])
        prev_pivot = pivot
        rank += 1
    return rank
