"""Factories for the example algebras: spin factors, matrix Jordan algebras
with their quasi-definite axis bases, symmetric-matrix algebras, Matsuo
algebras of 3-transposition sets, and the parametric two-generated algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algcore import Algebra, Element, find_unit, make_algebra, multiply
from .errors import (
    BadProductOrder,
    ConjugacyClosureError,
    DegenerateForm,
    InvariantViolation,
    NotInvolution,
)
from .exactla import Matrix, SubspaceBasis, rref, solve, vec

__all__ = [
    "Permutation",
    "MatsuoInput",
    "spin_factor",
    "matrix_jordan",
    "qd_basis_matrix",
    "sym_jordan",
    "sym_jordan_prime",
    "matsuo",
    "sn_transpositions",
    "two_gen_algebra",
    "hn_prime_matsuo_isomorphism_check",
]

HALF = Fraction(1, 2)


class Permutation:
    """Permutation of {1..m} in one-line notation (stored 0-based)."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Sequence[int]):
        self.mapping = tuple(mapping)
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise ValueError("mapping is not a bijection on the points")

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(range(m))

    @classmethod
    def transposition(cls, m: int, i: int, j: int) -> "Permutation":
        """Swap of the (1-based) points i and j."""
        mapping = list(range(m))
        mapping[i - 1], mapping[j - 1] = mapping[j - 1], mapping[i - 1]
        return cls(mapping)

    @property
    def degree(self) -> int:
        return len(self.mapping)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(x) = p(q(x))."""
        return Permutation(tuple(self.mapping[other.mapping[i]]
                                 for i in range(self.degree)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(self.mapping[i] == i for i in range(self.degree))

    def order(self) -> int:
        p = self
        k = 1
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def conjugate_by(self, d: "Permutation") -> "Permutation":
        """c^d = d^-1 c d."""
        return d.inverse() * self * d

    def cycle_string(self) -> str:
        seen = [False] * self.degree
        parts = []
        for i in range(self.degree):
            if seen[i] or self.mapping[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.mapping[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.mapping[j]
            parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
        return "".join(parts) if parts else "()"

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        return f"Permutation{self.cycle_string()}"


@dataclass(frozen=True)
class MatsuoInput:
    """A set D of involutions with pairwise product orders in {1, 2, 3}."""

    degree: int
    involutions: tuple[Permutation, ...]
    eta: Fraction = HALF

    def validate(self) -> None:
        for p in self.involutions:
            if p.degree != self.degree:
                raise ValueError("permutation degree mismatch")
            if p.order() != 2:
                raise NotInvolution(f"{p!r} does not have order 2")
        for i, c in enumerate(self.involutions):
            for d in self.involutions[i + 1:]:
                if (c * d).order() > 3:
                    raise BadProductOrder(f"|{c!r} {d!r}| > 3")


def _is_square(q: Fraction) -> Optional[Fraction]:
    """The positive rational square root of q, or None."""
    if q <= 0:
        return None
    rn, rd = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def spin_factor(diag: Sequence) -> Algebra:
    """Jordan algebra Q1 + V of a diagonal symmetric form.

    The product is (a1 + x)(b1 + y) = (ab + f(x, y))1 + ay + bx.  For each
    diagonal entry that is a rational square d = s^2, the idempotent
    (1 + v/s)/2 is designated as an axis; non-square entries get no axis.
    """
    d = vec(diag)
    if any(x == 0 for x in d):
        raise DegenerateForm("zero diagonal entry")
    n = len(d)
    dim = n + 1
    zero = [Fraction(0)] * dim

    def unitv(k):
        v = list(zero)
        v[k] = Fraction(1)
        return v

    structure = [[list(zero) for _ in range(dim)] for _ in range(dim)]
    structure[0][0] = unitv(0)
    for i in range(1, dim):
        structure[0][i] = unitv(i)
        structure[i][0] = unitv(i)
        row = list(zero)
        row[0] = d[i - 1]
        structure[i][i] = row
    names = ["1"] + [f"v{i}" for i in range(1, dim)]
    axes = []
    for i in range(1, dim):
        s = _is_square(d[i - 1])
        if s is not None:
            coords = list(zero)
            coords[0] = HALF
            coords[i] = 1 / (2 * s)
            axes.append(coords)
    return make_algebra(dim, names, structure, axes)


def _matrix_jordan_raw(n: int) -> Algebra:
    """M_n under A o B = (AB + BA)/2 on the basis e_ij, without axes."""
    dim = n * n

    def idx(i, j):
        return i * n + j

    zero = [Fraction(0)] * dim
    structure = [[list(zero) for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    row = structure[idx(i, j)][idx(k, l)]
                    if j == k:
                        row[idx(i, l)] += HALF
                    if l == i:
                        row[idx(k, j)] += HALF
    names = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return make_algebra(dim, names, structure)


def _qd_basis_pairs(n: int) -> list[tuple[tuple[Fraction, ...], tuple[Fraction, ...]]]:
    """Rank-1 factor pairs (l, r) of the inductive quasi-definite basis.

    Parameters are picked by a deterministic smallest-candidate scan: at
    every extension step b = 1, c = 2, and each d is the first integer
    from 2, 3, ... avoiding 1/(1 - d) in the excluded trace set.
    """
    pairs = [((Fraction(1),), (Fraction(1),))]
    for m in range(1, n):
        # embed the size-m basis into size m + 1
        ext = [(l + (Fraction(0),), r + (Fraction(0),)) for l, r in pairs]
        new_unit = tuple(Fraction(1) if k == m else Fraction(0) for k in range(m + 1))
        b, c = Fraction(1), Fraction(2)
        chosen: list[Fraction] = []
        fresh = []
        for i in range(m):
            excluded = {l[i] * r[i] for l, r in ext}
            t = 2
            while True:
                di = Fraction(t)
                if 1 / (1 - di) not in excluded and all(di * dj != 1 for dj in chosen):
                    break
                t += 1
            chosen.append(di)
            for x in (b, c):
                l = tuple(Fraction(1) if k == i else (di / x if k == m else Fraction(0))
                          for k in range(m + 1))
                r = tuple((1 - di) if k == i else (x if k == m else Fraction(0))
                          for k in range(m + 1))
                fresh.append((l, r))
        pairs = ext + fresh + [(new_unit, new_unit)]
    return pairs


def matrix_jordan(n: int) -> Algebra:
    """M_n^(+) with its quasi-definite basis of rank-1 axes designated."""
    if n < 1:
        raise ValueError("n must be >= 1")
    raw = _matrix_jordan_raw(n)
    pairs = _qd_basis_pairs(n)
    if len(pairs) != n * n:
        raise InvariantViolation("wrong quasi-definite basis size")
    axes = []
    for l, r in pairs:
        if sum(a * b for a, b in zip(l, r)) != 1:
            raise InvariantViolation("rank-1 factor pair is not normalized")
        coords = [l[i] * r[j] for i in range(n) for j in range(n)]
        axes.append(coords)
    if rref(Matrix(axes)).rank != n * n:
        raise InvariantViolation("quasi-definite basis is not linearly independent")
    # pairwise trace-form values: tr(l1^T r1 l2^T r2) = <r1, l2><r2, l1>
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            l1, r1 = pairs[i]
            l2, r2 = pairs[j]
            val = sum(a * b for a, b in zip(r1, l2)) * sum(a * b for a, b in zip(r2, l1))
            if val == 1:
                raise InvariantViolation("quasi-definite basis has a pair of form value 1")
    return make_algebra(raw.dim, raw.basis_names, raw.structure, axes)


def qd_basis_matrix(n: int) -> list[Element]:
    """The constructed quasi-definite axis basis of M_n^(+)."""
    return list(matrix_jordan(n).designated_axes)


def _sym_names(n: int) -> tuple[list[tuple[int, int]], list[str]]:
    index = [(i, i) for i in range(n)] + [(i, j) for i in range(n) for j in range(i + 1, n)]
    names = [f"e{i + 1}{i + 1}" if i == j else f"s{i + 1}{j + 1}" for i, j in index]
    return index, names


def sym_jordan(n: int) -> Algebra:
    """Symmetric n x n matrices under A o B = (AB + BA)/2.

    Basis: the diagonal units e_ii followed by e_ij + e_ji for i < j; the
    diagonal units are designated as axes.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    index, names = _sym_names(n)

    def as_matrix(k):
        i, j = index[k]
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i][j] += 1
        if i != j:
            m[j][i] += 1
        return Matrix(m)

    def coords_of(m: Matrix):
        return [m[i, j] for i, j in index]

    dim = len(index)
    mats = [as_matrix(k) for k in range(dim)]
    structure = []
    for a in mats:
        plane = []
        for b in mats:
            p = ((a @ b) + (b @ a)).scale(HALF)
            plane.append(coords_of(p))
        structure.append(plane)
    axes = []
    for i in range(n):
        coords = [Fraction(0)] * dim
        coords[i] = Fraction(1)
        axes.append(coords)
    return make_algebra(dim, names, structure, axes)


def sym_jordan_prime(n: int) -> Algebra:
    """Zero-row-sum symmetric matrices under the symmetrized product.

    Basis and designated axes: a_ij = (e_i - e_j)(e_i - e_j)^T / 2 for
    i < j.  Closure under the product is asserted during construction.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    idx_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    dim = len(idx_pairs)

    def axis_matrix(i, j):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i][i] = HALF
        m[j][j] = HALF
        m[i][j] = -HALF
        m[j][i] = -HALF
        return Matrix(m)

    mats = [axis_matrix(i, j) for i, j in idx_pairs]
    flat = Matrix([[m[i, j] for i in range(n) for j in range(n)] for m in mats])
    structure = []
    for a in mats:
        plane = []
        for b in mats:
            p = ((a @ b) + (b @ a)).scale(HALF)
            coords = solve(flat.transpose(), [p[i, j] for i in range(n) for j in range(n)])
            if coords is None:
                raise InvariantViolation("product left the zero-row-sum subspace")
            plane.append(coords)
        structure.append(plane)
    names = [f"a{i + 1}{j + 1}" for i, j in idx_pairs]
    axes = [[Fraction(1) if k == t else Fraction(0) for k in range(dim)]
            for t in range(dim)]
    return make_algebra(dim, names, structure, axes)


def matsuo(inp: MatsuoInput) -> tuple[Algebra, Matrix]:
    """Matsuo algebra on the involution set D, plus its predicted Gram matrix.

    The product of distinct c, d is 0 when |cd| = 2 and
    (eta/2)(c + d - c^d) when |cd| = 3, with c^d = d c d.
    """
    inp.validate()
    D = list(inp.involutions)
    dim = len(D)
    pos = {p: k for k, p in enumerate(D)}
    eta = Fraction(inp.eta)
    zero = [Fraction(0)] * dim
    structure = [[list(zero) for _ in range(dim)] for _ in range(dim)]
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for i, c in enumerate(D):
        structure[i][i][i] = Fraction(1)
        gram[i][i] = Fraction(1)
        for j in range(i + 1, dim):
            d = D[j]
            order = (c * d).order()
            row = list(zero)
            if order == 2:
                pass  # product 0, form 0
            elif order == 3:
                conj = c.conjugate_by(d)
                if conj not in pos:
                    raise ConjugacyClosureError(
                        f"{conj!r} = c^d is not in the involution set")
                row[i] += eta / 2
                row[j] += eta / 2
                row[pos[conj]] -= eta / 2
                gram[i][j] = gram[j][i] = eta / 2
            else:
                raise BadProductOrder(f"|{c!r} {d!r}| = {order}")
            structure[i][j] = row
            structure[j][i] = list(row)
    names = [p.cycle_string() for p in D]
    axes = [[Fraction(1) if k == t else Fraction(0) for k in range(dim)]
            for t in range(dim)]
    return make_algebra(dim, names, structure, axes), Matrix(gram)


def sn_transpositions(n: int, eta: Fraction = HALF) -> MatsuoInput:
    """All transpositions of S_n in lexicographic order."""
    invs = [Permutation.transposition(n, i, j)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return MatsuoInput(degree=n, involutions=tuple(invs), eta=eta)


def two_gen_algebra(alpha) -> Algebra:
    """The 3-dimensional algebra generated by two axes a, b with (a, b) = alpha.

    Basis {a, b, s} where s = ab - (a + b)/2 and s acts as the scalar
    pi = (alpha - 1)/2 on a, b, s.  Unital iff alpha != 1, with unit s/pi.
    """
    alpha = Fraction(alpha)
    pi = (alpha - 1) / 2
    structure = [
        [[1, 0, 0], [HALF, HALF, 1], [pi, 0, 0]],
        [[HALF, HALF, 1], [0, 1, 0], [0, pi, 0]],
        [[pi, 0, 0], [0, pi, 0], [0, 0, pi]],
    ]
    A = make_algebra(3, ["a", "b", "s"], structure, [[1, 0, 0], [0, 1, 0]])
    unit = find_unit(A)
    if alpha != 1:
        expected = A.element([0, 0, 1]) / pi
        if unit != expected:
            raise InvariantViolation("unit is not s/pi")
    elif unit is not None:
        raise InvariantViolation("alpha = 1 should give a non-unital algebra")
    return A


def hn_prime_matsuo_isomorphism_check(
    n: int, correspondence: Optional[Sequence[int]] = None
) -> bool:
    """Check a_ij -> (i j) transports H_n' exactly onto the Matsuo algebra of S_n.

    ``correspondence`` maps H_n' basis positions to Matsuo basis positions
    (identity by default; a wrong permutation is a negative control).
    Verifies structure constants and Gram matrices entrywise.
    """
    if not 3 <= n <= 5:
        raise ValueError("check is intended for 3 <= n <= 5")
    H = sym_jordan_prime(n)
    M, gram_m = matsuo(sn_transpositions(n))
    dim = H.dim
    corr = list(correspondence) if correspondence is not None else list(range(dim))
    if sorted(corr) != list(range(dim)):
        raise ValueError("correspondence is not a permutation")
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                if H.structure[i][j][k] != M.structure[corr[i]][corr[j]][corr[k]]:
                    return False
    # trace Gram of H_n' vs the predicted Matsuo Gram
    idx_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def axis_matrix(i, j):
        m = [[Fraction(0)] * n for _ in range(n)]
        m[i][i] = HALF
        m[j][j] = HALF
        m[i][j] = -HALF
        m[j][i] = -HALF
        return Matrix(m)

    mats = [axis_matrix(i, j) for i, j in idx_pairs]
    for i in range(dim):
        for j in range(dim):
            tr = sum((mats[i] @ mats[j])[k, k] for k in range(n))
            if tr != gram_m[corr[i], corr[j]]:
                return False
    return True
