from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from tropzar import linalg

small = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=max_rows).map(lambda m: (m, n))
    )


@given(matrices())
def test_rank_matches_sympy(mn):
    m, n = mn
    expect = sympy.Matrix(m).rank() if m else 0
    assert linalg.rank(m, n) == expect


@given(matrices())
def test_rank_nullity(mn):
    m, n = mn
    ker = linalg.nullspace(m, n)
    assert linalg.rank(m, n) + len(ker) == n
    for v in ker:
        assert all(x == 0 for x in linalg.matvec(m, v)) if m else True
    assert linalg.rank(ker, n) == len(ker) if ker else True


@given(matrices())
def test_left_nullspace_annihilates(mn):
    m, n = mn
    if not m:
        return
    for y in linalg.left_nullspace(m, n):
        assert all(x == 0 for x in linalg.matvec(linalg.transpose(m), y))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_consistent_systems(mn, x):
    m, n = mn
    if not m:
        return
    x = x[:n]
    b = linalg.matvec(m, x)
    sol = linalg.solve(m, b, n)
    assert sol is not None
    assert linalg.matvec(m, sol) == b


def test_solve_detects_inconsistency():
    assert linalg.solve([[1, 1], [2, 2]], [1, 3], 2) is None


def test_rref_pivots():
    r, piv = linalg.rref([[0, 2, 4], [1, 1, 1]], 3)
    assert piv == [0, 1]
    assert r[0] == [1, 0, -1] and r[1] == [0, 1, 2]
    assert all(isinstance(x, Fraction) for row in r for x in row)


def test_nonneg_solution():
    sol = linalg.nonneg_solution([[1, -1]], [0], 2)
    assert sol is not None and all(x >= 0 for x in sol)
    assert linalg.nonneg_solution([[1, 1]], [-1], 2) is None


def test_positive_kernel_vector():
    v = linalg.positive_kernel_vector([[1, 1, -2]], 3)
    assert v is not None and all(x > 0 for x in v)
    assert linalg.positive_kernel_vector([[1, 1, 1]], 3) is None
