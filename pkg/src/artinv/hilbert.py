"""O-sequences: the Hilbert functions of artinian local algebras.

``macaulay_bound`` gives the largest value a standard graded algebra can take
in the next degree; ``is_admissible`` checks a whole sequence against it.
Shape predicates (unimodal, symmetric, stretched, almost stretched) are
descriptive only: in particular symmetry of the Hilbert function neither
implies nor is implied by the algebra being Gorenstein, and nothing here
tests Gorensteinness.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InputError

__all__ = ["OSequence", "macaulay_representation", "macaulay_bound", "is_admissible"]


def macaulay_representation(h: int, i: int) -> list[tuple[int, int]]:
    """The unique binomial decomposition h = sum of C(a_k, k), k = i..j,
    with a_i > a_{i-1} > ... >= a_j >= j >= 1."""
    if h < 0 or i < 1:
        raise InputError(f"macaulay representation needs h >= 0, i >= 1: got h={h}, i={i}")
    parts: list[tuple[int, int]] = []
    rem = h
    k = i
    while rem > 0 and k >= 1:
        a = k
        while comb(a + 1, k) <= rem:
            a += 1
        parts.append((a, k))
        rem -= comb(a, k)
        k -= 1
    assert rem == 0, "greedy binomial decomposition must terminate exactly"
    return parts


def macaulay_bound(h: int, i: int) -> int:
    """Largest admissible next value after h in degree i (h^<i>)."""
    return sum(comb(a + 1, k + 1) for a, k in macaulay_representation(h, i))


@dataclass(frozen=True)
class OSequence:
    """A finite Hilbert function (h_0, ..., h_c); h_0 = 1, all values >= 1."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        while values and values[-1] == 0:
            values = values[:-1]
        if not values:
            raise InputError("empty Hilbert function")
        if values[0] != 1:
            raise InputError(f"Hilbert function must start with 1: got {values}")
        if any(v <= 0 for v in values):
            raise InputError(f"Hilbert function has a non-positive interior value: {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def parse(cls, text: str) -> "OSequence":
        cleaned = text.strip().strip("()[]")
        parts = [p for chunk in cleaned.split(",") for p in chunk.split()]
        if not parts:
            raise InputError(f"cannot parse Hilbert function from {text!r}")
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as exc:
            raise InputError(f"cannot parse Hilbert function from {text!r}") from exc

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    @property
    def length(self) -> int:
        """Total vector-space dimension: the sum of the values."""
        return sum(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    def is_admissible(self) -> bool:
        """Macaulay growth: h_{i+1} <= macaulay_bound(h_i, i) for all i >= 1."""
        return all(
            self.values[i + 1] <= macaulay_bound(self.values[i], i)
            for i in range(1, len(self.values) - 1)
        )

    def is_unimodal(self) -> bool:
        """Never rises again after the first strict descent."""
        descended = False
        for a, b in zip(self.values, self.values[1:]):
            if b < a:
                descended = True
            elif b > a and descended:
                return False
        return True

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def is_stretched(self) -> bool:
        """Every value beyond degree 1 equals one (vacuous for short sequences)."""
        return all(v == 1 for v in self.values[2:])

    def is_almost_stretched(self) -> bool:
        """Value 2 in degree 2, never above 2 afterwards."""
        return len(self.values) > 2 and self.values[2] == 2 and all(
            v <= 2 for v in self.values[2:]
        )

    def shape_tags(self) -> tuple[str, ...]:
        """Descriptive tags; symmetry is a shape fact, never a Gorenstein test."""
        tags = []
        if self.is_admissible():
            tags.append("admissible")
        if self.is_unimodal():
            tags.append("unimodal")
        if self.is_symmetric():
            tags.append("symmetric")
        if self.is_stretched():
            tags.append("stretched")
        if self.is_almost_stretched():
            tags.append("almost_stretched")
        return tuple(tags)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"


def is_admissible(values) -> bool:
    """True when the sequence is a valid O-sequence with Macaulay growth."""
    try:
        seq = values if isinstance(values, OSequence) else OSequence(tuple(values))
    except InputError:
        return False
    return seq.is_admissible()
