"""Exact linear algebra over a scalar field.

Matrices are lists of rows; a matrix M acts on coordinate vectors by
``matvec``: out[i] = sum_j M[i][j] * v[j], so column j holds the image of
the j-th basis vector. Subspaces are stored as reduced row echelon bases,
which makes equality, containment and deduplication canonical.
"""
from __future__ import annotations

from typing import Sequence

from .errors import AlgebraMismatchError
from .fields import Field, Scalar

__all__ = ["rref", "rank", "kernel", "matvec", "mat_mul", "identity_matrix", "Subspace"]

Vector = Sequence[Scalar]
Matrix = Sequence[Sequence[Scalar]]


def rref(rows: Matrix, field: Field) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns ascending)."""
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        head = work[r][col]
        if head != field.one:
            inv = field.inv(head)
            work[r] = [field.mul(v, inv) for v in work[r]]
        base = work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                c = work[i][col]
                row = work[i]
                work[i] = [field.sub(row[k], field.mul(c, base[k])) for k in range(ncols)]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows: Matrix, field: Field) -> int:
    return len(rref(rows, field)[0])


def kernel(matrix: Matrix, field: Field) -> list[list[Scalar]]:
    """Basis of {v : matrix @ v = 0}, one vector per free column."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    reduced, pivots = rref(matrix, field)
    pivot_set = set(pivots)
    basis: list[list[Scalar]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero] * ncols
        v[free] = field.one
        for row, pcol in zip(reduced, pivots):
            v[pcol] = field.neg(row[free])
        basis.append(v)
    return basis


def matvec(matrix: Matrix, vec: Vector, field: Field) -> list[Scalar]:
    nrows = len(matrix)
    out = [field.zero] * nrows
    for j, vj in enumerate(vec):
        if vj:
            for i in range(nrows):
                mij = matrix[i][j]
                if mij:
                    out[i] = field.add(out[i], field.mul(mij, vj))
    return out


def mat_mul(a: Matrix, b: Matrix, field: Field) -> list[list[Scalar]]:
    nrows, inner, ncols = len(a), len(b), len(b[0]) if b else 0
    out = [[field.zero] * ncols for _ in range(nrows)]
    for i in range(nrows):
        arow = a[i]
        orow = out[i]
        for k in range(inner):
            aik = arow[k]
            if aik:
                brow = b[k]
                for j in range(ncols):
                    if brow[j]:
                        orow[j] = field.add(orow[j], field.mul(aik, brow[j]))
    return out


def identity_matrix(n: int, field: Field) -> list[list[Scalar]]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


class Subspace:
    """A subspace of F^n held as a reduced row echelon basis (canonical)."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field: Field, ambient: int, rows: tuple, pivots: tuple):
        self.field = field
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors: Matrix) -> "Subspace":
        rows, pivots = rref(vectors, field)
        return cls(field, ambient, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls.from_vectors(field, ambient, identity_matrix(ambient, field))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _check(self, other: "Subspace"):
        if self.field != other.field or self.ambient != other.ambient:
            raise AlgebraMismatchError("subspaces of different spaces")

    def reduce_vector(self, vec: Vector) -> list[Scalar]:
        """Eliminate vec against the basis; zero result means membership."""
        field = self.field
        v = list(vec)
        for row, pcol in zip(self.rows, self.pivots):
            c = v[pcol]
            if c:
                v = [field.sub(v[k], field.mul(c, row[k])) for k in range(self.ambient)]
        return v

    def contains_vector(self, vec: Vector) -> bool:
        return not any(self.reduce_vector(vec))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(r) for r in other.rows)

    def add(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(self.field, self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: RREF of [[u|u],[v|0]]; left-zero rows carry the meet."""
        self._check(other)
        n = self.ambient
        field = self.field
        stacked: list[list[Scalar]] = []
        for u in self.rows:
            stacked.append(list(u) + list(u))
        for v in other.rows:
            stacked.append(list(v) + [field.zero] * n)
        reduced, pivots = rref(stacked, field)
        meet = [row[n:] for row, p in zip(reduced, pivots) if p >= n]
        return Subspace.from_vectors(field, n, meet)

    def image_under(self, matrix: Matrix) -> "Subspace":
        imgs = [matvec(matrix, r, self.field) for r in self.rows]
        return Subspace.from_vectors(self.field, len(matrix), imgs)

    def key(self) -> tuple:
        """Hashable canonical identity (the RREF rows)."""
        return self.rows

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.rows))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"
