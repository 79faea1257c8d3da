"""Axis analysis: Peirce decomposition, fusion rules, Frobenius form, radical.

Everything is exact; a "check" either returns booleans or raises one of
the errors in :mod:`axialq.errors` when a precondition is violated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algcore import Algebra, Element, ad_matrix, ideal_closure, multiply
from .errors import (
    Inconsistent,
    InvariantViolation,
    NotBasisOfAxes,
    NotIdempotent,
    NotPrimitiveAxis,
    NotSemisimple,
    NotSpanning,
)
from .exactla import Matrix, SubspaceBasis, det, inverse, kernel_basis, rref, solve

__all__ = [
    "EigDecomposition",
    "AxisReport",
    "FusionReport",
    "GramForm",
    "eigendecompose",
    "check_axis",
    "check_fusion",
    "miyamoto",
    "frobenius_projection",
    "frobenius_solve",
    "radical",
    "is_semisimple",
    "quasi_definite_basis_check",
    "positive_definite_check",
    "peirce_components",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class EigDecomposition:
    """Eigenspaces of ad_axis for the candidate eigenvalues 0, 1/2, 1."""

    axis: Element
    v0: SubspaceBasis
    v_half: SubspaceBasis
    v1: SubspaceBasis

    @property
    def semisimple(self) -> bool:
        return self.v0.dim + self.v_half.dim + self.v1.dim == self.axis.algebra.dim


@dataclass(frozen=True)
class AxisReport:
    is_idempotent: bool
    spectrum_ok: bool
    semisimple: bool
    primitive: bool
    fusion_ok: bool
    decomposition: Optional[EigDecomposition]

    @property
    def is_primitive_axis(self) -> bool:
        return self.is_idempotent and self.semisimple and self.primitive


@dataclass(frozen=True)
class FusionReport:
    """One boolean per fusion rule of a Jordan-type 1/2 axis."""

    zero_square: bool        # A0 * A0 in A0
    half_square: bool        # A1/2 * A1/2 in A0 + A1
    even_times_half: bool    # (A0 + A1) * A1/2 in A1/2
    zero_times_one: bool     # A0 * A1 = 0

    @property
    def all_ok(self) -> bool:
        return (self.zero_square and self.half_square
                and self.even_times_half and self.zero_times_one)

    @property
    def z2_graded(self) -> bool:
        # even part closed, odd*odd even, even*odd odd
        return self.zero_square and self.zero_times_one \
            and self.half_square and self.even_times_half


def eigendecompose(e: Element) -> EigDecomposition:
    """Exact kernels of (ad_e - lambda I) for lambda in {0, 1/2, 1}."""
    if not e.is_idempotent():
        raise NotIdempotent(f"{e!r} is not idempotent")
    ad = ad_matrix(e)
    n = e.algebra.dim
    ident = Matrix.identity(n)

    def eigenspace(lam: Fraction) -> SubspaceBasis:
        return kernel_basis(ad - ident.scale(lam))

    return EigDecomposition(axis=e,
                            v0=eigenspace(Fraction(0)),
                            v_half=eigenspace(HALF),
                            v1=eigenspace(Fraction(1)))


def check_axis(e: Element) -> AxisReport:
    """Full axis report: idempotency, spectrum, semisimplicity, primitivity, fusion."""
    if not e.is_idempotent():
        return AxisReport(False, False, False, False, False, None)
    dec = eigendecompose(e)
    ad = ad_matrix(e)
    n = e.algebra.dim
    ident = Matrix.identity(n)
    # independent spectrum witness: ad (ad - I/2) (ad - I) = 0
    spectrum_ok = (ad @ (ad - ident.scale(HALF)) @ (ad - ident)).is_zero()
    semisimple = dec.semisimple
    primitive = dec.v1.dim == 1 and not e.is_zero()
    fusion_ok = check_fusion(dec).all_ok if semisimple else False
    return AxisReport(True, spectrum_ok, semisimple, primitive, fusion_ok, dec)


def _products_within(A: Algebra, left: SubspaceBasis, right: SubspaceBasis,
                     target: SubspaceBasis) -> bool:
    for u in left.vectors:
        eu = Element(A, u)
        for w in right.vectors:
            p = multiply(eu, Element(A, w))
            if not target.contains(p.coords):
                return False
    return True


def check_fusion(dec: EigDecomposition) -> FusionReport:
    """Verify the four fusion inclusions by exhaustive pair products."""
    if not dec.semisimple:
        raise NotSemisimple("fusion check needs a semisimple decomposition")
    A = dec.axis.algebra
    even = dec.v0.sum_with(dec.v1)
    zero = SubspaceBasis.zero(A.dim)
    return FusionReport(
        zero_square=_products_within(A, dec.v0, dec.v0, dec.v0),
        half_square=_products_within(A, dec.v_half, dec.v_half, even),
        even_times_half=_products_within(A, even, dec.v_half, dec.v_half),
        zero_times_one=_products_within(A, dec.v0, dec.v1, zero),
    )


def miyamoto(dec: EigDecomposition) -> Matrix:
    """Miyamoto involution: fixes v0 + v1, negates v_half, as a matrix."""
    if not dec.semisimple:
        raise NotSemisimple("Miyamoto map needs a semisimple decomposition")
    cols = list(dec.v0.vectors) + list(dec.v1.vectors) + list(dec.v_half.vectors)
    c = Matrix(cols).transpose()
    signs = [Fraction(1)] * (dec.v0.dim + dec.v1.dim) + [Fraction(-1)] * dec.v_half.dim
    d = Matrix([[signs[i] if i == j else Fraction(0) for j in range(len(signs))]
                for i in range(len(signs))])
    return c @ d @ inverse(c)


def peirce_components(dec: EigDecomposition, x: Element) -> tuple[Element, Element, Fraction]:
    """Split x = x0 + x_half + alpha * axis for a primitive semisimple axis."""
    if not dec.semisimple or dec.v1.dim != 1:
        raise NotPrimitiveAxis("decomposition is not that of a primitive axis")
    A = x.algebra
    cols = list(dec.v0.vectors) + list(dec.v_half.vectors) + [dec.axis.coords]
    coords = solve(Matrix(cols).transpose(), x.coords)
    if coords is None:
        raise InvariantViolation("element does not decompose along the eigenspaces")
    d0, dh = dec.v0.dim, dec.v_half.dim
    x0 = Element(A, dec.v0.lift(coords[:d0])) if d0 else A.zero()
    xh = Element(A, dec.v_half.lift(coords[d0:d0 + dh])) if dh else A.zero()
    return x0, xh, coords[d0 + dh]


class GramForm:
    """Exact symmetric Gram matrix of the Frobenius form on the algebra basis."""

    __slots__ = ("algebra", "gram")

    def __init__(self, algebra: Algebra, gram: Matrix):
        if gram.rows != algebra.dim or gram.cols != algebra.dim:
            raise ValueError("Gram matrix shape != algebra dimension")
        if gram != gram.transpose():
            raise InvariantViolation("Gram matrix is not symmetric")
        self.algebra = algebra
        self.gram = gram

    def value(self, x: Element, y: Element) -> Fraction:
        gv = self.gram.apply(y.coords)
        return sum(a * b for a, b in zip(x.coords, gv))

    def is_invariant(self) -> bool:
        """(xy, z) = (x, yz) on all basis triples."""
        A = self.algebra
        basis = A.basis_elements()
        prods = [[multiply(basis[i], basis[j]) for j in range(A.dim)] for i in range(A.dim)]
        for i in range(A.dim):
            for j in range(A.dim):
                for k in range(j, A.dim):
                    if self.value(prods[i][j], basis[k]) != self.value(basis[i], prods[j][k]):
                        return False
        return True

    def __eq__(self, other):
        return (isinstance(other, GramForm) and self.algebra is other.algebra
                and self.gram == other.gram)

    def __repr__(self):
        return f"GramForm({self.gram!r})"


def frobenius_projection(A: Algebra, spanning_axes: Sequence[Element]) -> GramForm:
    """Frobenius form via projection coefficients on a spanning set of axes.

    For a primitive axis a, the form value (a, y) is the coefficient of a
    in the Peirce decomposition of y relative to a.  With enough axes to
    span A, the Gram matrix G is the unique solution of P G = F, where P
    stacks the axis coordinate rows.
    """
    decs = []
    for a in spanning_axes:
        rep = check_axis(a)
        if not rep.is_primitive_axis:
            raise NotPrimitiveAxis(f"{a!r} is not a primitive axis")
        decs.append(rep.decomposition)
    p = Matrix([a.coords for a in spanning_axes])
    if rref(p).rank != A.dim:
        raise NotSpanning("the given axes do not span the algebra")
    f_rows = []
    for a, dec in zip(spanning_axes, decs):
        row = []
        for j in range(A.dim):
            _, _, alpha = peirce_components(dec, A.basis_element(j))
            row.append(alpha)
        f_rows.append(row)
    f = Matrix(f_rows)
    g_cols = []
    for k in range(A.dim):
        col = solve(p, f.col(k))
        if col is None:
            raise InvariantViolation("projection values are not consistent with any form")
        g_cols.append(col)
    gram = Matrix(g_cols).transpose()
    form = GramForm(A, gram)
    if not form.is_invariant():
        raise InvariantViolation("projection form is not invariant")
    for a in spanning_axes:
        if form.value(a, a) != 1:
            raise InvariantViolation("projection form is not normalized on an axis")
    return form


def frobenius_solve(A: Algebra, axes: Sequence[Element]) -> tuple[GramForm, int]:
    """Frobenius form as the solution of the invariance + normalization system.

    Returns a solution together with the dimension of the homogeneous
    solution space (0 means the form is unique).
    """
    if not axes:
        raise ValueError("at least one axis is required for normalization")
    n = A.dim
    # unknowns: g(i, j) for i <= j
    index = {}
    for i in range(n):
        for j in range(i, n):
            index[(i, j)] = len(index)
    nun = len(index)

    def gidx(i: int, j: int) -> int:
        return index[(i, j)] if i <= j else index[(j, i)]

    rows, rhs = [], []
    # invariance: (e_i e_j, e_k) = (e_i, e_j e_k)
    for i in range(n):
        for j in range(n):
            cij = A.structure[i][j]
            for k in range(n):
                cjk = A.structure[j][k]
                row = [Fraction(0)] * nun
                for l in range(n):
                    if cij[l] != 0:
                        row[gidx(l, k)] += cij[l]
                    if cjk[l] != 0:
                        row[gidx(i, l)] -= cjk[l]
                if any(x != 0 for x in row):
                    rows.append(row)
                    rhs.append(Fraction(0))
    # normalization: (a, a) = 1
    for a in axes:
        row = [Fraction(0)] * nun
        for i in range(n):
            for j in range(n):
                if a.coords[i] != 0 and a.coords[j] != 0:
                    row[gidx(i, j)] += a.coords[i] * a.coords[j]
        rows.append(row)
        rhs.append(Fraction(1))
    m = Matrix(rows) if rows else Matrix.zero(0, nun)
    x = solve(m, rhs)
    if x is None:
        raise Inconsistent("no invariant normalized form exists for these axes")
    free_dim = kernel_basis(m).dim
    gram = Matrix([[x[gidx(i, j)] for j in range(n)] for i in range(n)])
    return GramForm(A, gram), free_dim


def radical(A: Algebra, g: GramForm) -> SubspaceBasis:
    """Kernel of the Gram matrix; checked to be an ideal free of axes."""
    ker = kernel_basis(g.gram)
    if not ker.is_zero():
        closed = ideal_closure(A, [Element(A, v) for v in ker.vectors])
        if closed != ker:
            raise InvariantViolation("form kernel is not an ideal")
    for a in A.designated_axes:
        if ker.contains(a.coords):
            raise InvariantViolation("a designated axis lies in the radical")
    return ker


def is_semisimple(A: Algebra, g: GramForm) -> bool:
    return radical(A, g).is_zero()


def quasi_definite_basis_check(
    X: Sequence[Element], g: GramForm
) -> tuple[bool, Optional[tuple[Element, Element, Fraction]]]:
    """All distinct pairs must have form value != 1; returns a witness on failure."""
    if not X:
        raise NotBasisOfAxes("empty axis list")
    if rref(Matrix([x.coords for x in X])).rank != len(X):
        raise NotBasisOfAxes("axes are linearly dependent")
    for x in X:
        rep = check_axis(x)
        if not (rep.is_idempotent and rep.semisimple):
            raise NotBasisOfAxes(f"{x!r} is not an axis")
    for i in range(len(X)):
        for j in range(i + 1, len(X)):
            val = g.value(X[i], X[j])
            if val == 1:
                return False, (X[i], X[j], val)
    return True, None


def positive_definite_check(g: GramForm) -> bool:
    """Sufficient test for definiteness: all leading principal minors positive.

    Over Q this is sufficient only; deciding anisotropy of a rational
    quadratic form in general is out of scope.
    """
    n = g.gram.rows
    for k in range(1, n + 1):
        minor = det(Matrix([[g.gram[i, j] for j in range(k)] for i in range(k)]))
        if minor <= 0:
            return False
    return True
