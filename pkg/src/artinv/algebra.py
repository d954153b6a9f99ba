"""Finite-dimensional quotients k[x_1..x_n]/I as concrete linear algebra.

An algebra is built from ideal generators: its basis is the set of standard
monomials of the reduced Groebner basis, and each variable acts by an exact
multiplication matrix. Elements are plain coordinate tuples over that basis;
every constructor reduces polynomial input to normal form first. Instances
are immutable after construction (caches only accrete) and all arithmetic is
exact, so results are deterministic for a fixed presentation.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    AlgebraMismatchError,
    CapExceededError,
    NotLocalError,
)
from .fields import Scalar
from .groebner import GroebnerBasis, StandardMonomials, buchberger, standard_monomials
from .hilbert import OSequence
from .linalg import Subspace, kernel, matvec
from .poly import Polynomial, RingContext, mono_mul, parse_polynomial

__all__ = ["DIM_CAP", "ArtinianAlgebra", "Ideal"]

DIM_CAP = 4096

Vector = tuple


class Ideal:
    """An ideal of an artinian algebra: a subspace closed under every
    variable's multiplication matrix, plus the generators that produced it."""

    __slots__ = ("algebra", "space", "generators")

    def __init__(self, algebra: "ArtinianAlgebra", space: Subspace, generators: tuple):
        self.algebra = algebra
        self.space = space
        self.generators = generators

    @property
    def dim(self) -> int:
        return self.space.dim

    def contains_vector(self, vec) -> bool:
        return self.space.contains_vector(vec)

    def basis_polynomials(self) -> tuple[Polynomial, ...]:
        return tuple(self.algebra.polynomial_from_element(r) for r in self.space.rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Ideal)
            and self.algebra is other.algebra
            and self.space == other.space
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.space.rows))

    def __repr__(self) -> str:
        return f"Ideal(dim={self.dim})"


class ArtinianAlgebra:
    """A finite-dimensional commutative quotient algebra with exact arithmetic."""

    def __init__(
        self,
        ctx: RingContext,
        gens: Sequence[Polynomial],
        gb: GroebnerBasis,
        basis: StandardMonomials,
    ):
        self.ctx = ctx
        self.field = ctx.field
        self.presentation_generators = tuple(gens)
        self.gb = gb
        self.basis = basis
        self.dim = len(basis)
        if self.dim > DIM_CAP:
            raise CapExceededError(f"algebra dimension {self.dim} exceeds the cap {DIM_CAP}")
        self.index = {m: i for i, m in enumerate(basis.monomials)}
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self.var_mats = tuple(self._variable_matrix(v) for v in range(ctx.nvars))
        # column-sparse view of each variable matrix, for fast closures
        self.var_cols = tuple(
            tuple(
                tuple((i, mat[i][j]) for i in range(self.dim) if mat[i][j])
                for j in range(self.dim)
            )
            for mat in self.var_mats
        )
        self.variable_vectors = tuple(
            self.element_from_polynomial(ctx.variable(v)) for v in range(ctx.nvars)
        )
        self._basis_mats: dict[int, list] = {}
        self._filtration: tuple[Subspace, ...] | None = None
        self._filtration_stable: bool | None = None
        self._socle: Ideal | None = None
        self._max_ideal: Ideal | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_generators(cls, ctx: RingContext, gens: Iterable[Polynomial]) -> "ArtinianAlgebra":
        gens = tuple(gens)
        gb = buchberger(gens, ctx)
        basis = standard_monomials(gb)
        return cls(ctx, gens, gb, basis)

    @classmethod
    def from_strings(cls, field, var_names: Sequence[str], sources: Iterable[str]) -> "ArtinianAlgebra":
        ctx = RingContext(field, tuple(var_names))
        return cls.from_generators(ctx, (parse_polynomial(s, ctx) for s in sources))

    def _coords(self, f: Polynomial) -> Vector:
        """Coordinates of a fully reduced polynomial (supported on the basis)."""
        vec = [self.field.zero] * self.dim
        for mono, coeff in f.terms:
            vec[self.index[mono]] = coeff
        return tuple(vec)

    def _variable_matrix(self, v: int) -> tuple:
        cols = []
        for b in self.basis.monomials:
            product = tuple(e + (1 if k == v else 0) for k, e in enumerate(b))
            if product in self.index:
                col = [self.field.zero] * self.dim
                col[self.index[product]] = self.field.one
            else:
                reduced = self.gb.reduce(Polynomial(self.ctx, ((product, self.field.one),)))
                col = list(self._coords(reduced))
            cols.append(col)
        return tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))

    # -- elements -------------------------------------------------------------

    def element_from_polynomial(self, f: Polynomial) -> Vector:
        """Reduce to normal form, then read off coordinates."""
        if f.ctx != self.ctx:
            raise AlgebraMismatchError("polynomial from a different ring")
        return self._coords(self.gb.reduce(f))

    def parse_element(self, source: str) -> Vector:
        return self.element_from_polynomial(parse_polynomial(source, self.ctx))

    def polynomial_from_element(self, vec) -> Polynomial:
        """The unique normal-form representative, for printing witnesses."""
        coeffs = {m: c for m, c in zip(self.basis.monomials, vec) if c}
        return Polynomial.from_dict(self.ctx, coeffs)

    def zero_vector(self) -> Vector:
        return (self.field.zero,) * self.dim

    def one_vector(self) -> Vector:
        unit = self.ctx.unit_monomial()
        vec = [self.field.zero] * self.dim
        if unit in self.index:
            vec[self.index[unit]] = self.field.one
        return tuple(vec)

    def basis_matrix(self, j: int):
        """Matrix of multiplication by the j-th basis monomial (cached)."""
        cached = self._basis_mats.get(j)
        if cached is not None:
            return cached
        mono = self.basis.monomials[j]
        cols = []
        for k, b in enumerate(self.basis.monomials):
            product = mono_mul(mono, b)
            if product in self.index:
                col = [self.field.zero] * self.dim
                col[self.index[product]] = self.field.one
            else:
                reduced = self.gb.reduce(Polynomial(self.ctx, ((product, self.field.one),)))
                col = list(self._coords(reduced))
            cols.append(col)
        mat = [[cols[k][i] for k in range(self.dim)] for i in range(self.dim)]
        self._basis_mats[j] = mat
        return mat

    def basis_product(self, i: int, j: int) -> Vector:
        """Structure constants: coordinates of (i-th basis) * (j-th basis)."""
        mat = self.basis_matrix(i)
        return tuple(mat[r][j] for r in range(self.dim))

    def multiplication_matrix(self, vec) -> list[list[Scalar]]:
        """Matrix of multiplication by the element with these coordinates."""
        field = self.field
        out = [[field.zero] * self.dim for _ in range(self.dim)]
        for j, c in enumerate(vec):
            if c:
                mat = self.basis_matrix(j)
                for r in range(self.dim):
                    row = mat[r]
                    orow = out[r]
                    for k in range(self.dim):
                        if row[k]:
                            orow[k] = field.add(orow[k], field.mul(c, row[k]))
        return out

    def multiply(self, u, v) -> Vector:
        return tuple(matvec(self.multiplication_matrix(u), v, self.field))

    def var_image(self, v: int, vec) -> list[Scalar]:
        """Sparse image of a coordinate vector under multiplication by x_v."""
        field = self.field
        out = [field.zero] * self.dim
        cols = self.var_cols[v]
        for j, c in enumerate(vec):
            if c:
                for i, m in cols[j]:
                    out[i] = field.add(out[i], field.mul(m, c))
        return out

    # -- ideals and the filtration ---------------------------------------------

    def close_under_variables(self, vectors: Iterable) -> Subspace:
        """Smallest variable-stable subspace containing the vectors: the ideal
        they generate, as a subspace."""
        field = self.field
        n = self.dim
        pivots: dict[int, list] = {}
        queue = [list(v) for v in vectors]
        nvars = self.ctx.nvars
        while queue:
            v = queue.pop()
            j = 0
            while j < n:
                if not v[j]:
                    j += 1
                    continue
                row = pivots.get(j)
                if row is None:
                    break
                c = v[j]
                for k in range(j, n):
                    rk = row[k]
                    if rk:
                        v[k] = field.sub(v[k], field.mul(c, rk))
                j += 1
            else:
                continue  # reduced to zero: nothing new
            head = v[j]
            if head != field.one:
                inv = field.inv(head)
                v = [field.mul(c, inv) for c in v]
            pivots[j] = v
            for var in range(nvars):
                queue.append(self.var_image(var, v))
        return Subspace.from_vectors(field, n, list(pivots.values()))

    def ideal_from_vectors(self, vectors: Iterable) -> Ideal:
        vectors = tuple(tuple(v) for v in vectors)
        return Ideal(self, self.close_under_variables(vectors), vectors)

    def ideal_from_strings(self, sources: Iterable[str]) -> Ideal:
        return self.ideal_from_vectors(self.parse_element(s) for s in sources)

    def is_ideal_subspace(self, space: Subspace) -> bool:
        return all(
            space.contains_vector(self.var_image(v, row))
            for row in space.rows
            for v in range(self.ctx.nvars)
        )

    def m_times(self, space: Subspace) -> Subspace:
        """The product m * N for a variable-stable N (spanned by x_v * rows)."""
        rows = [self.var_image(v, r) for r in space.rows for v in range(self.ctx.nvars)]
        return Subspace.from_vectors(self.field, self.dim, rows)

    def module_product(self, left: Subspace, right: Subspace) -> Subspace:
        """Span of all pairwise products of basis vectors (exact by bilinearity)."""
        rows = []
        for u in left.rows:
            mat = self.multiplication_matrix(u)
            for v in right.rows:
                rows.append(matvec(mat, v, self.field))
        return Subspace.from_vectors(self.field, self.dim, rows)

    def maximal_ideal(self) -> Ideal:
        """The ideal generated by the variable images."""
        if self._max_ideal is None:
            self._max_ideal = self.ideal_from_vectors(self.variable_vectors)
        return self._max_ideal

    def _compute_filtration(self):
        if self._filtration is not None:
            return
        pieces = [Subspace.full(self.field, self.dim)]
        current = self.maximal_ideal().space
        stable = False
        while True:
            pieces.append(current)
            nxt = self.m_times(current)
            if nxt.dim == current.dim:
                stable = current.dim == 0
                break
            current = nxt
        self._filtration = tuple(pieces)
        self._filtration_stable = stable

    def is_local(self) -> bool:
        """True when the variable images span the unique maximal ideal,
        i.e. the power filtration descends to zero."""
        if self.dim == 0:
            return False
        self._compute_filtration()
        return bool(self._filtration_stable)

    def _require_local(self):
        if not self.is_local():
            raise NotLocalError("operation requires an artinian local algebra")

    def filtration(self) -> tuple[Subspace, ...]:
        """Powers of the maximal ideal, descending to the zero subspace."""
        self._require_local()
        return self._filtration

    def mpow(self, i: int) -> Subspace:
        """The i-th power of the maximal ideal as a subspace (i >= 0)."""
        filt = self.filtration()
        return filt[i] if i < len(filt) else filt[-1]

    def hilbert_function(self) -> OSequence:
        """Dimensions of the graded pieces of the power filtration."""
        filt = self.filtration()
        values = [filt[i].dim - filt[i + 1].dim for i in range(len(filt) - 1)]
        return OSequence(tuple(values))

    @property
    def length(self) -> int:
        return self.dim

    # -- classical structure ----------------------------------------------------

    def annihilator(self, vec) -> Ideal:
        """(0 : a), the kernel of multiplication by a."""
        rows = kernel(self.multiplication_matrix(vec), self.field)
        space = Subspace.from_vectors(self.field, self.dim, rows)
        return Ideal(self, space, tuple(tuple(r) for r in space.rows))

    def socle(self) -> Ideal:
        """(0 : m): everything killed by every variable."""
        self._require_local()
        if self._socle is None:
            space = Subspace.full(self.field, self.dim)
            for mat in self.var_mats:
                rows = kernel(mat, self.field)
                space = space.intersect(Subspace.from_vectors(self.field, self.dim, rows))
            self._socle = Ideal(self, space, tuple(space.rows))
        return self._socle

    def is_gorenstein(self) -> bool:
        """One-dimensional socle."""
        self._require_local()
        return self.socle().dim == 1

    def quotient_length(self, vectors: Iterable) -> int:
        """Length of A modulo the ideal the vectors generate."""
        return self.dim - self.ideal_from_vectors(vectors).dim

    def is_monomial_ideal(self) -> bool:
        return self.gb.is_monomial()

    def degree_blocks(self) -> dict[int, tuple[int, ...]]:
        """Basis indices grouped by monomial degree (a grading only when the
        presentation is homogeneous)."""
        return self.basis.by_degree()

    def __repr__(self) -> str:
        return f"ArtinianAlgebra(field={self.field.name}, vars={self.ctx.var_names}, dim={self.dim})"


def irredundant_generators(gens: Sequence[Polynomial], ctx: RingContext) -> list[Polynomial]:
    """Greedy pruning: drop any generator contained in the ideal of the rest."""
    kept = [g for g in gens if not g.is_zero()]
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        if others and buchberger(others, ctx).contains(kept[i]):
            kept.pop(i)
        else:
            i += 1
    return kept


def is_complete_intersection(algebra: ArtinianAlgebra) -> bool:
    """Number of irredundant presentation generators equals the number of
    variables (the fewest possible for an artinian quotient)."""
    kept = irredundant_generators(algebra.presentation_generators, algebra.ctx)
    return len(kept) == algebra.ctx.nvars
