"""Exact scalar arithmetic over the rationals and prime fields.

Scalars are plain values: ``fractions.Fraction`` over Q, ``int`` residues in
``range(p)`` over F_p. A field object bundles the operations and the canonical
form; it never boxes the scalars themselves. Both field classes are immutable
and safe to share between threads.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .errors import BadCoefficientError, InputError, NotFiniteFieldError

__all__ = ["Scalar", "Rationals", "PrimeField", "QQ", "field_from_name", "is_prime"]

Scalar = Union[Fraction, int]

MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    """Trial division; plenty fast for the allowed range n < 2**31."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Rationals:
    """The field Q. Scalars are reduced ``Fraction`` values."""

    name = "Q"
    characteristic = 0
    is_finite = False
    order = None
    zero = Fraction(0)
    one = Fraction(1)

    def canon(self, value: Scalar) -> Fraction:
        """Canonical form: a reduced Fraction (lowest terms, positive denominator)."""
        return value if type(value) is Fraction else Fraction(value)

    def literal(self, numerator: int, denominator: int | None = None) -> Fraction:
        if denominator is None:
            return Fraction(numerator)
        return Fraction(numerator, denominator)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        if not b:
            raise ZeroDivisionError("division by zero")
        return a / b

    def elements(self) -> Iterator[Fraction]:
        raise NotFiniteFieldError("cannot enumerate the rationals")

    def __repr__(self) -> str:
        return "Rationals()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")


class PrimeField:
    """The field F_p for a prime 2 <= p < 2**31. Scalars are ints in range(p)."""

    __slots__ = ("p", "name")

    is_finite = True
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p <= MAX_PRIME or not is_prime(p):
            raise InputError(f"field order must be a prime in [2, 2**31): got {p!r}")
        self.p = p
        self.name = f"F{p}"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def canon(self, value: int) -> int:
        return value % self.p

    def literal(self, numerator: int, denominator: int | None = None) -> int:
        if denominator is not None:
            raise BadCoefficientError(
                f"fraction literal {numerator}/{denominator} is not allowed over {self.name}", 0
            )
        return numerator % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))


Field = Union[Rationals, PrimeField]

QQ = Rationals()


def field_from_name(name: str) -> Field:
    """Build a field from its short name: "Q", or "F<p>" with p prime."""
    text = name.strip()
    if text == "Q":
        return QQ
    if text.startswith("F") and text[1:].isdigit():
        return PrimeField(int(text[1:]))
    raise InputError(f'unknown field name {name!r}: expected "Q" or "F<p>"')
