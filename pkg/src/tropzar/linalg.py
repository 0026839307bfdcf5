"""Exact linear algebra over Q on plain lists of Fractions.

Matrices are lists of rows. Everything here is small (a few dozen rows at
most), so the routines favour clarity over speed.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

Matrix = list[list[Fraction]]


def as_matrix(rows: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    m = [[Fraction(x) for x in row] for row in rows]
    if ncols is not None:
        for row in m:
            if len(row) != ncols:
                raise ValueError(f"row of length {len(row)}, expected {ncols}")
    return m


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = as_matrix(rows, ncols)
    if not m:
        return [], []
    n = len(m[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                # rows are sparse; skip the zero entries of the pivot row
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: Optional[int] = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def left_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {y : y . rows = 0}."""
    if not rows:
        return []
    return nullspace(transpose(as_matrix(rows, ncols)), len(rows))


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return []
    return [list(col) for col in zip(*m)]


def matvec(m: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Optional[list[Fraction]]:
    """One solution of rows . x = rhs (free variables set to 0), or None."""
    aug = [list(r) + [b] for r, b in zip(as_matrix(rows, ncols), rhs)]
    red, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def nonneg_solution(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Optional[list[Fraction]]:
    """A vertex of {x >= 0 : rows . x = rhs}, or None if that set is empty.

    Phase one of the simplex method on exact rationals with Bland's rule,
    so it terminates without any tolerance handling.
    """
    a = as_matrix(rows, ncols)
    b = [Fraction(x) for x in rhs]
    m = len(a)
    if m == 0:
        return [Fraction(0)] * ncols
    for i in range(m):
        if b[i] < 0:
            a[i] = [-x for x in a[i]]
            b[i] = -b[i]
    width = ncols + m
    tab = [a[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [ncols + i for i in range(m)]
    # cost row of sum(artificials), expressed in the nonbasic variables
    cost = [Fraction(0)] * (width + 1)
    for i in range(m):
        for j in range(ncols):
            cost[j] -= tab[i][j]
        cost[width] -= tab[i][width]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:  # unbounded cannot happen in phase one
            break
        i = best[1]
        piv = tab[i][enter]
        tab[i] = [x / piv for x in tab[i]]
        for k in range(m):
            if k != i and tab[k][enter] != 0:
                f = tab[k][enter]
                tab[k] = [x - f * y for x, y in zip(tab[k], tab[i])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, tab[i])]
        basis[i] = enter
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * ncols
    for i, var in enumerate(basis):
        if var < ncols:
            x[var] = tab[i][width]
    return x


def positive_kernel_vector(rows: Sequence[Sequence], ncols: int) -> Optional[list[Fraction]]:
    """Some x with rows . x = 0 and every x_j >= 1, or None.

    The kernel is a cone, so this decides whether it meets the open
    positive orthant.
    """
    a = as_matrix(rows, ncols)
    if not a:
        return [Fraction(1)] * ncols
    # substitute x = y + 1 with y >= 0
    rhs = [-sum(row, Fraction(0)) for row in a]
    y = nonneg_solution(a, rhs, ncols)
    if y is None:
        return None
    return [v + 1 for v in y]
