"""Shared fixtures: a registry of constructed algebras with their Frobenius
forms, spanning axis sets, and quasi-definite bases, plus sampling helpers.

Also hooks the terminal summary so every acceptance criterion gets one
explicit PASS/FAIL line at the end of the run.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import pytest

from axialq import Algebra, Element, GramForm, find_unit, frobenius_projection, frobenius_solve
from axialq.constructions import (
    matrix_jordan,
    matsuo,
    sn_transpositions,
    spin_factor,
    sym_jordan,
    sym_jordan_prime,
    two_gen_algebra,
)
from axialq.jordanhalf import x_of

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AlgInfo:
    """One constructed algebra plus everything tests repeatedly need."""

    name: str
    A: Algebra
    g: GramForm
    spanning_axes: Optional[tuple[Element, ...]]  # axes spanning A, or None
    qd_basis: Optional[tuple[Element, ...]]       # quasi-definite axis basis, or None
    unit: Optional[Element]


def _sym_spanning_axes(A: Algebra, n: int) -> tuple[Element, ...]:
    """Axes spanning the full symmetric-matrix Jordan algebra: the diagonal
    units e_ii plus the rank-1 projections (e_ii + e_jj + s_ij)/2."""
    axes = [A.basis_element(i) for i in range(n)]
    # off-diagonal basis names come after the n diagonal ones, in (i, j) order
    k = n
    for i in range(n):
        for j in range(i + 1, n):
            coords = [Fraction(0)] * A.dim
            coords[i] = HALF
            coords[j] = HALF
            coords[k] = HALF
            axes.append(A.element(coords))
            k += 1
    return tuple(axes)


def _spin_spanning_axes(A: Algebra) -> tuple[Element, ...]:
    """(1+v_1)/2, (1-v_1)/2, then (1+v_i)/2 for the remaining coordinates."""
    axes = []
    for sign in (1, -1):
        coords = [Fraction(0)] * A.dim
        coords[0] = HALF
        coords[1] = Fraction(sign, 2)
        axes.append(A.element(coords))
    for i in range(2, A.dim):
        coords = [Fraction(0)] * A.dim
        coords[0] = HALF
        coords[i] = HALF
        axes.append(A.element(coords))
    return tuple(axes)


@functools.cache
def registry() -> tuple[AlgInfo, ...]:
    out = []

    def add(name, A, spanning=None, qd=None, prefer_projection=True):
        if spanning is not None and prefer_projection:
            g = frobenius_projection(A, list(spanning))
        else:
            g, _ = frobenius_solve(A, list(A.designated_axes))
        out.append(AlgInfo(name=name, A=A, g=g,
                           spanning_axes=tuple(spanning) if spanning else None,
                           qd_basis=tuple(qd) if qd else None,
                           unit=find_unit(A)))

    for diag, tag in (([1, 1], "spin_11"), ([1, 1, 1], "spin_111")):
        A = spin_factor(diag)
        span = _spin_spanning_axes(A)
        add(tag, A, spanning=span, qd=span[: A.dim])

    for n in (2, 3):
        A = matrix_jordan(n)
        add(f"m{n}", A, spanning=A.designated_axes, qd=A.designated_axes)

    for n in (2, 3):
        A = sym_jordan(n)
        span = _sym_spanning_axes(A, n)
        add(f"h{n}", A, spanning=span, qd=span)

    for n in (3, 4):
        A = sym_jordan_prime(n)
        add(f"h{n}p", A, spanning=A.designated_axes, qd=A.designated_axes)

    for n in (3, 4):
        A, _pred = matsuo(sn_transpositions(n))
        add(f"matsuo_s{n}", A, spanning=A.designated_axes, qd=A.designated_axes)

    for alpha, tag in ((HALF, "12"), (Fraction(1, 4), "14")):
        A = two_gen_algebra(alpha)
        g, _ = frobenius_solve(A, list(A.designated_axes))
        a, b = A.designated_axes
        span = (a, b, x_of(a, b, g))
        out.append(AlgInfo(name=f"twogen_{tag}", A=A, g=g,
                           spanning_axes=span, qd_basis=span, unit=find_unit(A)))

    # alpha = 0: radical is nonzero, so keep it out of the projection path
    A0 = two_gen_algebra(Fraction(0))
    g0, _ = frobenius_solve(A0, list(A0.designated_axes))
    out.append(AlgInfo(name="twogen_0", A=A0, g=g0,
                       spanning_axes=None, qd_basis=None, unit=find_unit(A0)))
    return tuple(out)


@functools.cache
def circle_axes(count: int = 16) -> tuple[Element, ...]:
    """Primitive axes (1 + b*u + c*v)/2 of the 3-dim unit spin factor, built
    from rational points b^2 + c^2 = 1/4 via Pythagorean parameterization."""
    sp = registry()[0].A
    out = [sp.element([HALF, HALF, Fraction(0)]),
           sp.element([HALF, -HALF, Fraction(0)]),
           sp.element([HALF, Fraction(0), HALF])]
    for m in range(2, 30):
        for k in range(1, m):
            den = 2 * (m * m + k * k)
            b = Fraction(m * m - k * k, den)
            c = Fraction(2 * m * k, den)
            for e in (sp.element([HALF, b, c]), sp.element([HALF, -b, c])):
                if e not in out:
                    out.append(e)
            if len(out) >= count:
                return tuple(out[:count])
    return tuple(out)


def by_name(name: str) -> AlgInfo:
    for info in registry():
        if info.name == name:
            return info
    raise KeyError(name)


@pytest.fixture(scope="session")
def algebras() -> tuple[AlgInfo, ...]:
    return registry()


@pytest.fixture(scope="session")
def spin3() -> AlgInfo:
    return by_name("spin_11")


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(20240901)


def random_element(A: Algebra, rng: random.Random) -> Element:
    return A.element([Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                      for _ in range(A.dim)])


def axis_pairs(info: AlgInfo):
    """All unordered pairs of distinct axes from the richest axis set known
    for this algebra."""
    axes = info.spanning_axes or info.A.designated_axes
    seen = []
    for a in axes:
        if a not in seen:
            seen.append(a)
    return list(itertools.combinations(seen, 2))


# ---------------------------------------------------------------------------
# Acceptance summary: one PASS/FAIL line per criterion at end of run.
# ---------------------------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _ACCEPTANCE[name] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and report.failed:
        _ACCEPTANCE[name] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        label = name.removeprefix("test_criterion_").replace("_", " ")
        terminalreporter.write_line(f"criterion {label}: {_ACCEPTANCE[name]}")
