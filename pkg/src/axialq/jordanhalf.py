"""Core machinery for quasi-definite axial algebras of Jordan type 1/2.

Builds the idempotent x_a(b) from a pair of axes, axis bases of the
0-eigenspace, word-to-axis reduction, the recursive unit construction,
and the capacity decomposition of the unit into pairwise orthogonal axes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algcore import (
    Algebra,
    Element,
    Word,
    ad_matrix,
    find_unit,
    multiply,
    restrict_to_subspace,
    subalgebra_closure,
)
from .axial import (
    EigDecomposition,
    GramForm,
    check_axis,
    eigendecompose,
    peirce_components,
    quasi_definite_basis_check,
    radical,
)
from .errors import (
    DegenerateDenominator,
    FormValueOne,
    InvariantViolation,
    NotPrimitiveAxis,
    NotSemisimple,
    NotSpanning,
    NotUnit,
    RecursionBasisFailure,
    ResidualNonzero,
    SameAxis,
)
from .exactla import Matrix, SubspaceBasis, kernel_basis, rref

__all__ = [
    "PairDecomposition",
    "PairIdentityReport",
    "TripleFormResult",
    "CapacityResult",
    "SpecialChain",
    "ChainLink",
    "pair_decompose",
    "x_of",
    "pair_identity_suite",
    "triple_form_identity",
    "a0_axis_basis",
    "word_to_axis",
    "build_unit",
    "capacity_decomposition",
    "special_chain",
    "orthogonality_propagation_check",
]

HALF = Fraction(1, 2)


def _primitive_decomposition(a: Element) -> EigDecomposition:
    dec = eigendecompose(a)  # raises NotIdempotent for non-idempotents
    if not dec.semisimple or dec.v1.dim != 1:
        raise NotPrimitiveAxis(f"{a!r} is not a primitive axis")
    return dec


@dataclass(frozen=True)
class PairDecomposition:
    """b split along the Peirce decomposition of the axis a."""

    a: Element
    b: Element
    alpha: Fraction
    a0: Element
    a_half: Element


def pair_decompose(a: Element, b: Element, g: GramForm) -> PairDecomposition:
    """Split b = a0 + a_half + (a, b) a relative to the primitive axis a."""
    dec = _primitive_decomposition(a)
    a0, a_half, coeff = peirce_components(dec, b)
    alpha = g.value(a, b)
    if coeff != alpha:
        raise InvariantViolation(
            "form value disagrees with the projection coefficient on the axis")
    if a0 + a_half + alpha * a != b:
        raise InvariantViolation("Peirce components do not recompose the element")
    return PairDecomposition(a=a, b=b, alpha=alpha, a0=a0, a_half=a_half)


def _x_raw(a: Element, b: Element, alpha: Fraction) -> Element:
    return (2 * multiply(a, b) - alpha * a - b) / (alpha - 1)


def x_of(a: Element, b: Element, g: GramForm) -> Element:
    """The idempotent (2ab - (a,b)a - b) / ((a,b) - 1) in A_0(a)."""
    if a == b:
        raise SameAxis("x_a(b) needs two distinct axes")
    _primitive_decomposition(a)
    _primitive_decomposition(b)
    alpha = g.value(a, b)
    if alpha == 1:
        raise FormValueOne("(a, b) = 1: quasi-definiteness is violated at this pair")
    x = _x_raw(a, b, alpha)
    if x.is_zero():
        raise InvariantViolation("x_a(b) vanished for (a, b) != 1")
    if not x.is_idempotent():
        raise InvariantViolation("x_a(b) is not idempotent")
    if g.value(x, x) != 1:
        raise InvariantViolation("(x_a(b), x_a(b)) != 1")
    if not multiply(a, x).is_zero():
        raise InvariantViolation("x_a(b) is not in the 0-eigenspace of a")
    return x


@dataclass(frozen=True)
class PairIdentityReport:
    """Exact checks of the two-generated identities for an axis pair."""

    alpha: Fraction
    vacuous: bool                    # a == b: the x-construction is undefined
    product_contractions: bool       # (ab)b, (ab)a, (ab)(ab) formulas
    zero_component_square: bool      # a0^2 = (1 - alpha) a0
    half_component_square: bool      # a1/2^2 = alpha a0 + (alpha - alpha^2) a
    mixed_component_product: bool    # a0 a1/2 = ((1 - alpha)/2) a1/2
    x_idempotent: bool
    x_norm_one: bool
    pair_unit: bool                  # a + x_a(b) is a unit of <a, b>
    zero_product_zero_form: bool     # ab = 0  =>  (a, b) = 0 (the converse
                                     # needs quasi-definiteness of the whole
                                     # algebra, which a single pair cannot see)
    a0_meets_bhalf_trivially: bool   # A_0(a) n A_1/2(b) = 0 when alpha not in {0, 1}

    @property
    def all_ok(self) -> bool:
        return all((self.product_contractions, self.zero_component_square,
                    self.half_component_square, self.mixed_component_product,
                    self.x_idempotent, self.x_norm_one, self.pair_unit,
                    self.zero_product_zero_form, self.a0_meets_bhalf_trivially))


def pair_identity_suite(a: Element, b: Element, g: GramForm) -> PairIdentityReport:
    """Check the full pairwise identity suite for two primitive axes."""
    dec_a = _primitive_decomposition(a)
    _primitive_decomposition(b)
    alpha = g.value(a, b)
    pd = pair_decompose(a, b, g)
    ab = multiply(a, b)

    contractions = (
        multiply(ab, b) == HALF * (alpha * b + ab)
        and multiply(ab, a) == HALF * (alpha * a + ab)
        and multiply(ab, ab) == (alpha / 4) * (a + b + 2 * ab)
    )
    zero_sq = multiply(pd.a0, pd.a0) == (1 - alpha) * pd.a0
    half_sq = multiply(pd.a_half, pd.a_half) == alpha * pd.a0 + (alpha - alpha * alpha) * a
    mixed = multiply(pd.a0, pd.a_half) == ((1 - alpha) / 2) * pd.a_half

    vacuous = a == b
    if not vacuous and alpha != 1:
        x = _x_raw(a, b, alpha)
        x_idem = multiply(x, x) == x and not x.is_zero()
        x_norm = g.value(x, x) == 1
        u = a + x
        closure = subalgebra_closure(a.algebra, [a, b])
        pair_unit = all(
            multiply(u, Element(a.algebra, v)) == Element(a.algebra, v)
            for v in closure.vectors)
    else:
        x_idem = x_norm = pair_unit = True  # vacuous-pass

    zero_form = alpha == 0 if ab.is_zero() else True

    if not vacuous and alpha not in (0, 1):
        dec_b = eigendecompose(b)
        meets = dec_a.v0.intersection(dec_b.v_half).is_zero()
    else:
        meets = True

    return PairIdentityReport(
        alpha=alpha, vacuous=vacuous,
        product_contractions=contractions,
        zero_component_square=zero_sq,
        half_component_square=half_sq,
        mixed_component_product=mixed,
        x_idempotent=x_idem, x_norm_one=x_norm, pair_unit=pair_unit,
        zero_product_zero_form=zero_form, a0_meets_bhalf_trivially=meets,
    )


@dataclass(frozen=True)
class TripleFormResult:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def triple_form_identity(a: Element, b: Element, c: Element,
                         g: GramForm) -> TripleFormResult:
    """Compare (x_a(b), x_a(c)) against its closed form in the pair form values.

    With alpha = (a,b), beta = (b,c), gamma = (a,c) and phi = (ab, c), the
    predicted value is (-alpha*gamma - beta + 2 phi) / (-alpha*gamma + alpha + gamma - 1).
    """
    if a == b or a == c or b == c:
        raise SameAxis("triple identity needs pairwise distinct axes")
    alpha = g.value(a, b)
    gamma = g.value(a, c)
    beta = g.value(b, c)
    if alpha == 1 or gamma == 1:
        raise FormValueOne("(a,b) or (a,c) equals 1")
    denom = -alpha * gamma + alpha + gamma - 1
    if denom == 0:
        raise DegenerateDenominator("-alpha*gamma + alpha + gamma - 1 = 0")
    phi = g.value(multiply(a, b), c)
    lhs = g.value(x_of(a, b, g), x_of(a, c, g))
    rhs = (-alpha * gamma - beta + 2 * phi) / denom
    return TripleFormResult(lhs=lhs, rhs=rhs)


def a0_axis_basis(a: Element, X: Sequence[Element], g: GramForm) -> list[Element]:
    """The spanning set {x_a(y) : y in X, y != a} of A_0(a), deduplicated."""
    dec = _primitive_decomposition(a)
    out: list[Element] = []
    for y in X:
        if y == a:
            continue
        alpha = g.value(a, y)
        if alpha == 1:
            raise FormValueOne(f"(a, y) = 1 for y = {y!r}")
        x = _x_raw(a, y, alpha)
        if x.is_zero() or x in out:
            continue
        if not x.is_idempotent() or g.value(x, x) != 1:
            raise InvariantViolation("projected element is not a normalized idempotent")
        out.append(x)
    span = SubspaceBasis(a.algebra.dim, [x.coords for x in out])
    if span != dec.v0:
        raise InvariantViolation("span of the projected axes != A_0(a)")
    return out


def word_to_axis(A: Algebra, G: Sequence[Element], w: Word,
                 g: GramForm) -> tuple[Element, Fraction, Element]:
    """Reduce a word over generating axes to an axis of A.

    Returns (axis, scale, correction) with

        axis = scale * (eval(w) + correction)

    where the correction is a combination of strictly shorter words
    (returned as the concrete element it evaluates to).  Length-1 words
    return the generator itself; length-2 words return the x-construction
    on the two letters; longer words reduce through the axes of their
    subwords.
    """
    for gen in G:
        _primitive_decomposition(gen)

    def rec(tree):
        if isinstance(tree, int):
            gen = G[tree]
            return gen, Fraction(1), A.zero(), gen
        q1, s1, c1, ev1 = rec(tree[0])
        q2, s2, c2, ev2 = rec(tree[1])
        ev = multiply(ev1, ev2)
        cross = multiply(ev1, c2) + multiply(c1, ev2) + multiply(c1, c2)
        if q1 == q2:
            # q1 q2 = q1, so the product rescales the same axis
            return q1, s1 * s2, cross, ev
        alpha = g.value(q1, q2)
        if alpha == 1:
            raise FormValueOne("(q1, q2) = 1 during word reduction")
        axis = x_of(q1, q2, g)
        scale = 2 * s1 * s2 / (alpha - 1)
        corr = cross - (alpha * q1 + q2) / (2 * s1 * s2)
        return axis, scale, corr, ev

    axis, scale, corr, ev = rec(w.tree)
    if scale == 0:
        raise InvariantViolation("word reduction produced a zero scale")
    if scale * (ev + corr) != axis:
        raise InvariantViolation("word reduction identity failed")
    return axis, scale, corr


def _restricted_gram(g: GramForm, span: SubspaceBasis, sub: Algebra) -> GramForm:
    rows = []
    for u in span.vectors:
        gu = g.gram.apply(u)
        rows.append([sum(x * y for x, y in zip(v, gu)) for v in span.vectors])
    return GramForm(sub, Matrix(rows))


def _select_axis_basis(candidates: Sequence[Element], target: SubspaceBasis,
                       g: GramForm) -> list[Element]:
    """Greedy independent, pairwise (x,y) != 1 subset spanning the target."""
    chosen: list[Element] = []
    span = SubspaceBasis.zero(target.ambient_dim)
    for x in candidates:
        if span.contains(x.coords):
            continue
        if any(g.value(x, y) == 1 for y in chosen):
            continue
        chosen.append(x)
        span = SubspaceBasis(target.ambient_dim, [c.coords for c in chosen])
        if span.dim == target.dim:
            break
    if span != target:
        raise RecursionBasisFailure(
            "projected axes do not contain a quasi-definite basis of A_0(a)")
    return chosen


def _unit_recursion(A: Algebra, X: Sequence[Element], g: GramForm) -> Element:
    if A.dim == 1:
        return X[0]
    a = X[0]
    dec = _primitive_decomposition(a)
    candidates = a0_axis_basis(a, X, g)
    basis0 = _select_axis_basis(candidates, dec.v0, g)
    sub, sub_axes = restrict_to_subspace(A, dec.v0, basis0)
    g_sub = _restricted_gram(g, dec.v0, sub)
    e0_sub = _unit_recursion(sub, sub_axes, g_sub)
    e0 = Element(A, dec.v0.lift(e0_sub.coords))
    return e0 + a


def build_unit(A: Algebra, X: Sequence[Element], g: GramForm) -> Optional[Element]:
    """Unit of A by recursive descent through 0-eigenspaces.

    X must be a quasi-definite basis of primitive axes and A must be
    semisimple; both are checked.  The result is cross-checked against the
    direct linear-system unit.
    """
    if len(X) != A.dim:
        raise NotSpanning("axis list does not have basis size")
    ok, witness = quasi_definite_basis_check(X, g)
    if not ok:
        a, b, _ = witness
        raise FormValueOne(f"({a!r}, {b!r}) = 1 in the designated basis")
    for x in X:
        _primitive_decomposition(x)
    if not radical(A, g).is_zero():
        raise NotSemisimple("the algebra has a nonzero radical")
    e = _unit_recursion(A, X, g)
    direct = find_unit(A)
    if direct is None or direct != e:
        raise InvariantViolation("recursive unit disagrees with the solved unit")
    return e


@dataclass(frozen=True)
class CapacityResult:
    """Decomposition of the unit into pairwise orthogonal primitive axes."""

    summands: tuple[Element, ...]
    pivot_trace: tuple[tuple[Element, tuple[Element, ...]], ...]
    residual: Element

    @property
    def capacity(self) -> int:
        """Length of the constructed decomposition (an upper bound on c(e))."""
        return len(self.summands)


def _is_unit(A: Algebra, e: Element) -> bool:
    return all(multiply(e, A.basis_element(j)) == A.basis_element(j)
               for j in range(A.dim))


def _dedup(elems: Sequence[Element]) -> list[Element]:
    out: list[Element] = []
    for e in elems:
        if e not in out:
            out.append(e)
    return out


def capacity_decomposition(A: Algebra, G: Sequence[Element], e: Element,
                           g: GramForm) -> CapacityResult:
    """Decompose the unit e into pairwise orthogonal axes by iterated projection.

    At every step the first remaining axis becomes a pivot; the others are
    replaced by their x-projections into its 0-eigenspace, deduplicated.
    """
    if not _is_unit(A, e):
        raise NotUnit("the given element does not act as the unit")
    for gen in G:
        rep = check_axis(gen)
        if not rep.is_primitive_axis:
            raise NotPrimitiveAxis(f"{gen!r} is not a primitive axis")
    if subalgebra_closure(A, list(G)).dim != A.dim:
        raise NotSpanning("the generators do not generate the algebra")

    summands: list[Element] = []
    trace: list[tuple[Element, tuple[Element, ...]]] = []
    residual = e
    level = _dedup(G)
    while level:
        pivot = level[0]
        summands.append(pivot)
        residual = residual - pivot
        projected: list[Element] = []
        for q in level[1:]:
            alpha = g.value(pivot, q)
            if alpha == 1:
                raise FormValueOne("(pivot, q) = 1 during the capacity run")
            x = _x_raw(pivot, q, alpha)
            if not x.is_zero() and x not in projected:
                projected.append(x)
        trace.append((pivot, tuple(projected)))
        level = projected
    if not residual.is_zero():
        raise ResidualNonzero("capacity run terminated with a nonzero residual")

    # invariants of the result
    if len(summands) > len(G):
        raise InvariantViolation("more summands than generators")
    total = A.zero()
    for i, s in enumerate(summands):
        total = total + s
        if not check_axis(s).is_primitive_axis:
            raise InvariantViolation("a summand is not a primitive axis")
        for t in summands[i + 1:]:
            if not multiply(s, t).is_zero():
                raise InvariantViolation("summands are not pairwise orthogonal")
    if total != e:
        raise InvariantViolation("summands do not add up to the unit")
    return CapacityResult(summands=tuple(summands), pivot_trace=tuple(trace),
                          residual=residual)


@dataclass(frozen=True)
class ChainLink:
    subspace: SubspaceBasis
    special_axis: Optional[Element]


@dataclass(frozen=True)
class SpecialChain:
    """Descending chain of special subalgebras traversed by the capacity run."""

    links: tuple[ChainLink, ...]

    @property
    def dims(self) -> list[int]:
        return [link.subspace.dim for link in self.links]


def special_chain(A: Algebra, G: Sequence[Element], g: GramForm) -> SpecialChain:
    """A > A_0(y1) > A_0(y1, y2) > ... > (0) along the capacity pivots."""
    e = find_unit(A)
    if e is None:
        raise NotUnit("the algebra has no unit")
    result = capacity_decomposition(A, G, e, g)
    links: list[ChainLink] = []
    current = SubspaceBasis.full(A.dim)
    for pivot in result.summands:
        links.append(ChainLink(subspace=current, special_axis=pivot))
        current = current.intersection(kernel_basis(ad_matrix(pivot)))
    if not current.is_zero():
        raise InvariantViolation("special chain did not terminate at the zero subspace")
    links.append(ChainLink(subspace=current, special_axis=None))
    return SpecialChain(links=tuple(links))


def orthogonality_propagation_check(q: Element, a: Element, b: Element,
                                    g: GramForm) -> bool:
    """If qa = 0 and q x_a(b) = 0 then qb = 0.

    Returns True when the hypothesis held (the conclusion is then asserted
    exactly) and False for a vacuous pass.
    """
    for axis in (q, a, b):
        _primitive_decomposition(axis)
    x = x_of(a, b, g)
    if multiply(q, a).is_zero() and multiply(q, x).is_zero():
        if not multiply(q, b).is_zero():
            raise InvariantViolation("orthogonality did not propagate to b")
        return True
    return False
