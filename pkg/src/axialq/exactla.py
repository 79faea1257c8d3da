"""Exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` throughout; there is no floating point
anywhere in the package.  Matrices and subspace bases are immutable after
construction, so everything here is safe to share between threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

__all__ = [
    "Fraction",
    "Matrix",
    "SubspaceBasis",
    "RrefResult",
    "rref",
    "kernel_basis",
    "solve",
    "det",
    "inverse",
    "vec",
]

Vector = tuple[Fraction, ...]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point is not allowed; use Fraction or int")
    return Fraction(x)


def vec(entries: Iterable) -> Vector:
    """Coerce an iterable of numbers to an exact coordinate vector."""
    return tuple(_frac(x) for x in entries)


class Matrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(vec(row) for row in entries)
        if rows:
            cols = len(rows[0])
            if any(len(r) != cols for r in rows):
                raise ValueError("ragged matrix")
        else:
            cols = 0
        self.rows = len(rows)
        self.cols = cols
        self._e = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        z = Fraction(0)
        return cls([[z] * cols for _ in range(rows)])

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> Vector:
        return self._e[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._e)

    def entries(self) -> tuple[Vector, ...]:
        return self._e

    def transpose(self) -> "Matrix":
        return Matrix([self.col(j) for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self._e, other._e)])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix([[c * a for a in r] for r in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = other.transpose()._e
        return Matrix([[sum(a * b for a, b in zip(r, c)) for c in ot]
                       for r in self._e])

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product."""
        v = vec(v)
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self._e)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._e for a in r)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self._e)
        return f"Matrix[{self.rows}x{self.cols}: {body}]"


class RrefResult:
    __slots__ = ("reduced", "pivot_columns", "rank")

    def __init__(self, reduced: Matrix, pivot_columns: list[int]):
        self.reduced = reduced
        self.pivot_columns = pivot_columns
        self.rank = len(pivot_columns)

    def __iter__(self):
        return iter((self.reduced, self.pivot_columns, self.rank))


def rref(m: Matrix) -> RrefResult:
    """Unique reduced row echelon form with pivot columns and rank."""
    rows = [list(r) for r in m.entries()]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return RrefResult(Matrix(rows), pivots)


class SubspaceBasis:
    """A subspace of Q^n, canonicalized to RREF row vectors.

    Two equal subspaces always have identical representations, so ``==``
    is subspace equality.
    """

    __slots__ = ("ambient_dim", "vectors")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence]):
        self.ambient_dim = ambient_dim
        vs = [vec(v) for v in vectors]
        if any(len(v) != ambient_dim for v in vs):
            raise ValueError("vector length != ambient dimension")
        if vs:
            reduced = rref(Matrix(vs)).reduced
            vs = [r for r in reduced.entries() if any(a != 0 for a in r)]
        self.vectors = tuple(vs)

    @classmethod
    def zero(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "SubspaceBasis":
        return cls(ambient_dim, Matrix.identity(ambient_dim).entries())

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def is_zero(self) -> bool:
        return self.dim == 0

    def contains(self, v: Sequence) -> bool:
        return self.coords_of(v) is not None

    def coords_of(self, v: Sequence) -> Optional[Vector]:
        """Coordinates of v in this basis, or None if v is outside."""
        v = vec(v)
        if self.dim == 0:
            return () if all(a == 0 for a in v) else None
        bt = Matrix(self.vectors).transpose()
        return solve(bt, v)

    def lift(self, coords: Sequence) -> Vector:
        """The ambient vector with the given coordinates in this basis."""
        coords = vec(coords)
        if len(coords) != self.dim:
            raise ValueError("coordinate length != subspace dimension")
        out = [Fraction(0)] * self.ambient_dim
        for c, b in zip(coords, self.vectors):
            for k in range(self.ambient_dim):
                out[k] += c * b[k]
        return tuple(out)

    def sum_with(self, other: "SubspaceBasis") -> "SubspaceBasis":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return SubspaceBasis(self.ambient_dim, list(self.vectors) + list(other.vectors))

    def intersection(self, other: "SubspaceBasis") -> "SubspaceBasis":
        """Exact intersection, via the kernel of the stacked basis matrix."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.is_zero() or other.is_zero():
            return SubspaceBasis.zero(self.ambient_dim)
        # columns: coefficients on self.vectors then on other.vectors
        cols = [list(v) for v in self.vectors] + [[-a for a in v] for v in other.vectors]
        stacked = Matrix(cols).transpose()
        out = []
        for k in kernel_basis(stacked).vectors:
            coeffs = k[: self.dim]
            w = [Fraction(0)] * self.ambient_dim
            for c, b in zip(coeffs, self.vectors):
                for i in range(self.ambient_dim):
                    w[i] += c * b[i]
            out.append(w)
        return SubspaceBasis(self.ambient_dim, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubspaceBasis)
                and self.ambient_dim == other.ambient_dim
                and self.vectors == other.vectors)

    def __hash__(self):
        return hash((self.ambient_dim, self.vectors))

    def __repr__(self):
        return f"SubspaceBasis(dim {self.dim} in Q^{self.ambient_dim})"


def kernel_basis(m: Matrix) -> SubspaceBasis:
    """Basis of the right null space of m."""
    reduced, pivots, rank = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced[r, f]
        out.append(v)
    return SubspaceBasis(m.cols, out)


def solve(m: Matrix, rhs: Sequence) -> Optional[Vector]:
    """Some x with m x = rhs, or None when inconsistent.

    When the solution space is positive-dimensional the free variables are
    set to zero, so the result is deterministic.
    """
    rhs = vec(rhs)
    if len(rhs) != m.rows:
        raise ValueError("rhs length != number of rows")
    aug = Matrix([list(r) + [b] for r, b in zip(m.entries(), rhs)]) \
        if m.cols > 0 else Matrix([[b] for b in rhs])
    reduced, pivots, _ = rref(aug)
    if m.cols in pivots:
        return None  # pivot in the rhs column: inconsistent
    x = [Fraction(0)] * m.cols
    for r, p in enumerate(pivots):
        x[p] = reduced[r, m.cols]
    return tuple(x)


def det(m: Matrix) -> Fraction:
    """Determinant by Gaussian elimination with exact rationals."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    rows = [list(r) for r in m.entries()]
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if rows[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        p = rows[c][c]
        result *= p
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return sign * result


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises ValueError if m is singular."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix([list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
                  for i, r in enumerate(m.entries())])
    reduced, pivots, rank = rref(aug)
    if rank < n or pivots != list(range(n)):
        raise ValueError("singular matrix")
    return Matrix([r[n:] for r in reduced.entries()])
