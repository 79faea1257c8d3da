"""Exact rational linear algebra: worked examples plus property tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from axialq.exactla import (
    Matrix,
    SubspaceBasis,
    det,
    inverse,
    kernel_basis,
    rref,
    solve,
    vec,
)

F = Fraction


def M(rows):
    return Matrix([[F(x) for x in row] for row in rows])


# --- concrete examples -----------------------------------------------------

def test_rref_example():
    r = rref(M([[1, 2, 3], [2, 4, 6], [1, 1, 1]]))
    assert r.rank == 2
    assert r.pivot_columns == [0, 1]
    assert r.reduced.entries() == ((F(1), F(0), F(-1)), (F(0), F(1), F(2)), (F(0),) * 3)


def test_kernel_example():
    k = kernel_basis(M([[1, 2, 3], [2, 4, 6]]))
    assert k.dim == 2
    m = M([[1, 2, 3], [2, 4, 6]])
    for v in k.vectors:
        assert all(x == 0 for x in m.apply(v))


def test_solve_consistent_and_inconsistent():
    m = M([[1, 1], [0, 1], [1, 2]])
    x = solve(m, [F(3), F(1), F(4)])
    assert x == (F(2), F(1))
    assert solve(m, [F(3), F(1), F(5)]) is None


def test_solve_zeroes_free_variables():
    m = M([[1, 1, 0]])
    assert solve(m, [F(2)]) == (F(2), F(0), F(0))


def test_det_and_inverse():
    m = M([[2, 1], [1, 1]])
    assert det(m) == 1
    assert inverse(m) @ m == Matrix.identity(2)
    assert det(M([[1, 2], [2, 4]])) == 0


def test_matrix_rejects_floats():
    with pytest.raises(TypeError):
        Matrix([[0.5]])
    with pytest.raises(TypeError):
        vec([1.5])


def test_subspace_canonical_equality():
    s1 = SubspaceBasis(3, [[F(1), F(0), F(1)], [F(0), F(1), F(1)]])
    s2 = SubspaceBasis(3, [[F(1), F(1), F(2)], [F(2), F(1), F(3)]])
    assert s1 == s2
    assert s1.contains([F(3), F(-1), F(2)])
    assert not s1.contains([F(1), F(0), F(0)])


def test_subspace_sum_and_intersection():
    e1 = SubspaceBasis(3, [[F(1), F(0), F(0)]])
    e12 = SubspaceBasis(3, [[F(1), F(0), F(0)], [F(0), F(1), F(0)]])
    e23 = SubspaceBasis(3, [[F(0), F(1), F(0)], [F(0), F(0), F(1)]])
    assert e12.sum_with(e23).dim == 3
    inter = e12.intersection(e23)
    assert inter.dim == 1
    assert inter.contains([F(0), F(1), F(0)])
    assert e1.intersection(e23).dim == 0


def test_lift_and_coords_roundtrip():
    s = SubspaceBasis(3, [[F(1), F(2), F(0)], [F(0), F(0), F(1)]])
    v = [F(3), F(6), F(-2)]
    assert list(s.lift(s.coords_of(v))) == v


# --- property tests --------------------------------------------------------

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=8)


def matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda m: st.lists(
                st.lists(rationals, min_size=m, max_size=m),
                min_size=n, max_size=n).map(Matrix)))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rref(m).rank + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    r = rref(m).reduced
    assert rref(r).reduced == r


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_recovers_consistent_rhs(m, data):
    x = data.draw(st.lists(rationals, min_size=m.cols, max_size=m.cols))
    rhs = m.apply(x)
    y = solve(m, rhs)
    assert y is not None
    assert m.apply(y) == rhs


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilated(m):
    for v in kernel_basis(m).vectors:
        assert all(c == 0 for c in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n),
                       min_size=n, max_size=n).map(Matrix)))
def test_det_zero_iff_singular(m):
    assert (det(m) == 0) == (rref(m).rank < m.cols)
