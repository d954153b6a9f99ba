"""Reduced Groebner bases under grevlex via Buchberger's algorithm.

Pair selection follows the normal strategy (smallest lcm first); the coprime
and chain criteria prune useless pairs. The output is the unique reduced
basis: monic generators, fully tail-reduced, sorted ascending by leading
monomial, hence independent of the input generator order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapExceededError, ContextMismatchError, NotArtinianError
from .poly import (
    Monomial,
    Polynomial,
    RingContext,
    grevlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

__all__ = ["GroebnerBasis", "StandardMonomials", "normal_form", "s_polynomial", "buchberger", "standard_monomials"]

# Guard for the standard-monomial candidate box, well above the algebra cap.
_BOX_GUARD = 5_000_000


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Fully reduce f: no term of the result is divisible by any basis lead."""
    ctx = f.ctx
    field = ctx.field
    leads = [(g.leading_monomial(), g) for g in basis if not g.is_zero()]
    for lm, g in leads:
        if g.ctx != ctx:
            raise ContextMismatchError("normal form against a different ring")
    remainder: dict = {}
    work = f
    while not work.is_zero():
        mono, coeff = work.terms[0]
        for lm, g in leads:
            if mono_divides(lm, mono):
                scale = field.div(coeff, g.leading_coefficient())
                work = work - g.term_multiple(mono_div(mono, lm), scale)
                break
        else:
            remainder[mono] = coeff
            work = Polynomial(ctx, work.terms[1:])
    return Polynomial.from_dict(ctx, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """The S-polynomial, with both leading terms scaled to the lcm."""
    field = f.ctx.field
    lcm = mono_lcm(f.leading_monomial(), g.leading_monomial())
    left = f.term_multiple(mono_div(lcm, f.leading_monomial()), field.inv(f.leading_coefficient()))
    right = g.term_multiple(mono_div(lcm, g.leading_monomial()), field.inv(g.leading_coefficient()))
    return left - right


def _interreduce(basis: list[Polynomial]) -> tuple[Polynomial, ...]:
    """Minimalize and tail-reduce, producing the unique reduced basis."""
    # Divisibility implies grevlex-smaller, so ascending order puts every
    # potential divisor before the monomials it divides.
    ordered = sorted((g.monic() for g in basis), key=lambda g: grevlex_key(g.leading_monomial()))
    minimal: list[Polynomial] = []
    for g in ordered:
        lm = g.leading_monomial()
        if not any(mono_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    for i in range(len(minimal)):
        others = minimal[:i] + minimal[i + 1 :]
        minimal[i] = normal_form(minimal[i], others).monic()
    minimal.sort(key=lambda g: grevlex_key(g.leading_monomial()))
    return tuple(minimal)


def buchberger(generators: Iterable[Polynomial], ctx: RingContext | None = None) -> "GroebnerBasis":
    """Compute the reduced Groebner basis of the ideal the generators span."""
    gens = [g for g in generators]
    if not gens and ctx is None:
        raise ValueError("buchberger needs generators or an explicit ring context")
    if ctx is None:
        ctx = gens[0].ctx
    if any(g.ctx != ctx for g in gens):
        raise ContextMismatchError("generators from different rings")
    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return GroebnerBasis(ctx, ())

    pending: set[tuple[int, int]] = set(itertools.combinations(range(len(basis)), 2))

    def lcm_of(pair):
        i, j = pair
        return mono_lcm(basis[i].leading_monomial(), basis[j].leading_monomial())

    while pending:
        pair = min(pending, key=lambda p: (grevlex_key(lcm_of(p)), p))
        pending.discard(pair)
        i, j = pair
        lmi, lmj = basis[i].leading_monomial(), basis[j].leading_monomial()
        lcm = mono_lcm(lmi, lmj)
        if lcm == mono_mul(lmi, lmj):
            continue  # coprime leads: S-polynomial reduces to zero
        chain = False
        for k in range(len(basis)):
            if k in pair:
                continue
            if mono_divides(basis[k].leading_monomial(), lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    chain = True
                    break
        if chain:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not h.is_zero():
            basis.append(h.monic())
            t = len(basis) - 1
            pending.update((s, t) for s in range(t))

    return GroebnerBasis(ctx, _interreduce(basis))


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic, tail-reduced, sorted by lead."""

    ctx: RingContext
    polys: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def is_unit_ideal(self) -> bool:
        return any(g.leading_monomial() == self.ctx.unit_monomial() for g in self.polys)

    def is_monomial(self) -> bool:
        """True when the ideal is generated by monomials."""
        return all(g.is_monomial() for g in self.polys)

    def leading_monomials(self) -> tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.polys)

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.polys)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()


@dataclass(frozen=True)
class StandardMonomials:
    """Monomials outside the leading-term ideal, ascending in grevlex."""

    monomials: tuple[Monomial, ...]

    def __iter__(self):
        return iter(self.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(m) for m in self.monomials)

    def by_degree(self) -> dict[int, tuple[int, ...]]:
        """Indices of the basis grouped by total degree, each ascending."""
        groups: dict[int, list[int]] = {}
        for i, m in enumerate(self.monomials):
            groups.setdefault(sum(m), []).append(i)
        return {d: tuple(ix) for d, ix in sorted(groups.items())}


def _pure_power_bounds(gb: GroebnerBasis) -> list[int]:
    """Least e with x_i^e a leading monomial, per variable; the quotient is
    finite-dimensional exactly when every variable has one."""
    n = gb.ctx.nvars
    if gb.is_unit_ideal():
        return [0] * n
    bounds: list[int | None] = [None] * n
    for lm in gb.leading_monomials():
        support = [i for i, e in enumerate(lm) if e > 0]
        if len(support) == 1:
            i = support[0]
            e = lm[i]
            if bounds[i] is None or e < bounds[i]:
                bounds[i] = e
    for i, b in enumerate(bounds):
        if b is None:
            raise NotArtinianError(gb.ctx.var_names[i])
    return bounds  # type: ignore[return-value]


def standard_monomials(gb: GroebnerBasis) -> StandardMonomials:
    """Enumerate the monomial basis of the quotient, ascending in grevlex."""
    bounds = _pure_power_bounds(gb)
    box = 1
    for b in bounds:
        box *= max(b, 1)
    if box > _BOX_GUARD:
        raise CapExceededError(f"standard-monomial candidate box has {box} cells")
    leads = gb.leading_monomials()
    found = [
        m
        for m in itertools.product(*(range(b) for b in bounds))
        if not any(mono_divides(lm, m) for lm in leads)
    ]
    found.sort(key=grevlex_key)
    return StandardMonomials(tuple(found))
