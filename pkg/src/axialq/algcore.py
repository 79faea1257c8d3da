"""Commutative algebras given by structure constants.

An algebra is a dimension, a named basis, and a rank-3 grid of exact
rational structure constants c[i][j][k]: the product of basis elements
i and j has coordinate c[i][j][k] on basis element k.  A list of
designated axes (idempotents of interest) may ride along.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence

from .errors import AlgebraMismatch, CommutativityViolation, InvariantViolation, NotIdempotent
from .exactla import Matrix, SubspaceBasis, kernel_basis, solve, vec

__all__ = [
    "Algebra",
    "Element",
    "Word",
    "make_algebra",
    "multiply",
    "ad_matrix",
    "subalgebra_closure",
    "ideal_closure",
    "find_unit",
    "jordan_identity_check",
    "restrict_to_subspace",
]


class Algebra:
    """Finite-dimensional commutative algebra over Q."""

    __slots__ = ("dim", "basis_names", "structure", "designated_axes")

    def __init__(self, dim: int, basis_names: Sequence[str], structure, axes=()):
        self.dim = dim
        self.basis_names = tuple(basis_names)
        # structure[i][j] is the coordinate vector of (basis i) * (basis j)
        self.structure = tuple(tuple(vec(row) for row in plane) for plane in structure)
        self.designated_axes = tuple(
            a if isinstance(a, Element) else Element(self, a) for a in axes)

    def element(self, coords) -> "Element":
        return Element(self, coords)

    def basis_element(self, i: int) -> "Element":
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return Element(self, coords)

    def zero(self) -> "Element":
        return Element(self, [Fraction(0)] * self.dim)

    def basis_elements(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def __repr__(self):
        return f"Algebra(dim {self.dim}, basis {list(self.basis_names)})"


class Element:
    """Element of an algebra: an exact coordinate vector in its basis."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: Algebra, coords):
        self.algebra = algebra
        self.coords = vec(coords)
        if len(self.coords) != algebra.dim:
            raise ValueError("coordinate length != algebra dimension")

    def _same(self, other: "Element"):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements live in different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        self._same(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Element":
        return Element(self.algebra, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        return self.scale(Fraction(1) / Fraction(c))

    def scale(self, c) -> "Element":
        c = Fraction(c)
        return Element(self.algebra, [c * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def is_idempotent(self) -> bool:
        return multiply(self, self) == self

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __repr__(self):
        terms = [f"{c}*{n}" for c, n in zip(self.coords, self.algebra.basis_names) if c != 0]
        return " + ".join(terms) if terms else "0"


class Word:
    """Binary product tree over indices into a list of generators.

    ``tree`` is either an int (a generator index) or a pair of trees.
    """

    __slots__ = ("tree",)

    def __init__(self, tree):
        self.tree = self._check(tree)

    @staticmethod
    def _check(tree):
        if isinstance(tree, int):
            if tree < 0:
                raise ValueError("negative generator index")
            return tree
        left, right = tree
        return (Word._check(left), Word._check(right))

    @property
    def letters(self) -> list[int]:
        out: list[int] = []

        def walk(t):
            if isinstance(t, int):
                out.append(t)
            else:
                walk(t[0])
                walk(t[1])

        walk(self.tree)
        return out

    def __len__(self):
        return len(self.letters)

    def evaluate(self, generators: Sequence[Element]) -> Element:
        def ev(t):
            if isinstance(t, int):
                return generators[t]
            return multiply(ev(t[0]), ev(t[1]))

        return ev(self.tree)

    def __eq__(self, other):
        return isinstance(other, Word) and self.tree == other.tree

    def __repr__(self):
        def fmt(t):
            if isinstance(t, int):
                return str(t)
            return f"({fmt(t[0])}*{fmt(t[1])})"

        return f"Word{fmt(self.tree)}"


def make_algebra(dim: int, names: Sequence[str], structure, axes=()) -> Algebra:
    """Validate and build an algebra from a structure-constant grid."""
    if len(names) != dim:
        raise ValueError("basis name count != dimension")
    if len(structure) != dim or any(len(p) != dim for p in structure) \
            or any(len(row) != dim for p in structure for row in p):
        raise ValueError("structure grid dimensions must all equal dim")
    alg = Algebra(dim, names, structure)
    for i in range(dim):
        for j in range(i + 1, dim):
            if alg.structure[i][j] != alg.structure[j][i]:
                raise CommutativityViolation(
                    f"c[{i}][{j}] != c[{j}][{i}] ({names[i]}, {names[j]})")
    designated = []
    for a in axes:
        e = Element(alg, a.coords if isinstance(a, Element) else a)
        if not e.is_idempotent():
            raise NotIdempotent(f"designated axis {e!r} is not idempotent")
        designated.append(e)
    alg.designated_axes = tuple(designated)
    return alg


def multiply(x: Element, y: Element) -> Element:
    """Bilinear product from the structure constants."""
    x._same(y)
    alg = x.algebra
    n = alg.dim
    out = [Fraction(0)] * n
    table = alg.structure
    for i, xi in enumerate(x.coords):
        if xi == 0:
            continue
        row = table[i]
        for j, yj in enumerate(y.coords):
            if yj == 0:
                continue
            c = xi * yj
            prod = row[j]
            for k in range(n):
                if prod[k] != 0:
                    out[k] += c * prod[k]
    return Element(alg, out)


def ad_matrix(x: Element) -> Matrix:
    """Matrix of left multiplication by x: column j is x * basis_j."""
    alg = x.algebra
    cols = [multiply(x, alg.basis_element(j)).coords for j in range(alg.dim)]
    return Matrix(cols).transpose()


def subalgebra_closure(A: Algebra, seed: Sequence[Element]) -> SubspaceBasis:
    """Smallest subspace containing the seed and closed under the product.

    Iterates pairwise products of the current canonical basis, in
    lexicographic (i, j) order, until the dimension stabilizes.
    """
    if not seed:
        raise ValueError("seed must be nonempty")
    span = SubspaceBasis(A.dim, [s.coords for s in seed])
    while True:
        new_vectors = list(span.vectors)
        grew = False
        basis = [Element(A, v) for v in span.vectors]
        for i, u in enumerate(basis):
            for v in basis[i:]:
                p = multiply(u, v)
                if not span.contains(p.coords):
                    new_vectors.append(p.coords)
                    grew = True
        if not grew:
            return span
        span = SubspaceBasis(A.dim, new_vectors)


def ideal_closure(A: Algebra, seed: Sequence[Element]) -> SubspaceBasis:
    """Smallest subspace containing the seed and absorbing under the product."""
    span = SubspaceBasis(A.dim, [s.coords for s in seed])
    while True:
        new_vectors = list(span.vectors)
        grew = False
        for v in span.vectors:
            ev = Element(A, v)
            for j in range(A.dim):
                p = multiply(ev, A.basis_element(j))
                if not span.contains(p.coords):
                    new_vectors.append(p.coords)
                    grew = True
        if not grew:
            return span
        span = SubspaceBasis(A.dim, new_vectors)


def find_unit(A: Algebra) -> Optional[Element]:
    """The two-sided unit of A, or None.

    Solves the stacked linear system e * basis_j = basis_j for all j.  A
    positive-dimensional solution space cannot happen for a commutative
    unital algebra and is reported as an invariant failure.
    """
    n = A.dim
    if n == 0:
        return None
    # unknowns e_i; equations sum_i e_i c[i][j][k] = delta_jk
    rows = []
    rhs = []
    for j in range(n):
        for k in range(n):
            rows.append([A.structure[i][j][k] for i in range(n)])
            rhs.append(Fraction(1) if j == k else Fraction(0))
    m = Matrix(rows)
    x = solve(m, rhs)
    if x is None:
        return None
    if not kernel_basis(m).is_zero():
        raise InvariantViolation("unit equation has a positive-dimensional solution space")
    return Element(A, x)


def restrict_to_subspace(A: Algebra, span: SubspaceBasis,
                         axes: Sequence[Element] = ()) -> tuple[Algebra, list["Element"]]:
    """Re-express A on a product-closed subspace as a first-class algebra.

    Structure constants are taken in the canonical basis of ``span``.
    Returns the restricted algebra together with the images of ``axes``
    (which must lie in the subspace).  Raises ValueError if the subspace
    is not closed under the product.
    """
    d = span.dim
    basis = [Element(A, v) for v in span.vectors]
    structure = []
    for i in range(d):
        plane = []
        for j in range(d):
            p = multiply(basis[i], basis[j])
            coords = span.coords_of(p.coords)
            if coords is None:
                raise ValueError("subspace is not closed under the product")
            plane.append(coords)
        structure.append(plane)
    names = [f"s{i}" for i in range(d)]
    sub = Algebra(d, names, structure)
    images = []
    for a in axes:
        coords = span.coords_of(a.coords)
        if coords is None:
            raise ValueError("axis does not lie in the subspace")
        images.append(Element(sub, coords))
    sub.designated_axes = tuple(images)
    return sub, images


def jordan_identity_check(A: Algebra) -> bool:
    """True iff the full linearization of (x^2 y)x = x^2 (yx) vanishes.

    The plain Jordan identity is cubic in x, so it cannot be tested on a
    basis alone; over an infinite field it holds iff its multilinear form

        sum over pairings {i,j} of (x_i x_j) :
            ((x_i x_j) y) x_k  =  (x_i x_j)(y x_k)

    vanishes on all basis tuples (commutativity collapses the six
    permutations of x_1, x_2, x_3 to three pairings).
    """
    n = A.dim
    basis = A.basis_elements()
    # cache pairwise basis products
    prod = [[multiply(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    for (i, j, k) in itertools.combinations_with_replacement(range(n), 3):
        pairings = ((i, j, k), (i, k, j), (j, k, i))
        for y in range(n):
            ey = basis[y]
            acc = A.zero()
            for (p, q, r) in pairings:
                pq = prod[p][q]
                acc = acc + multiply(multiply(pq, ey), basis[r]) \
                          - multiply(pq, multiply(ey, basis[r]))
            if not acc.is_zero():
                return False
    return True
