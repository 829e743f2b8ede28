"""Exact feasibility for {x >= 0 : A x = b} by a two-phase-style simplex over Fractions.

Dimensions here are tiny (a few dozen columns at most), so a dense tableau with
Bland's anti-cycling rule is plenty.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def feasible_point(A: Sequence[Sequence[int]], b: Sequence[int]) -> Optional[list[Fraction]]:
    """Return some x >= 0 with A x = b, or None when the system is infeasible."""
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return []
    rows = []
    for row, rhs in zip(A, b):
        if len(row) != n:
            raise ValueError("ragged constraint matrix")
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append([Fraction(v) for v in row] + [Fraction(int(i == len(rows))) for i in range(m)] + [Fraction(rhs)])
    width = n + m
    basis = [n + i for i in range(m)]
    # reduced costs of the phase-one objective sum(artificials)
    cost = [-sum(r[j] for r in rows) for j in range(width)] + [-sum(r[-1] for r in rows)]
    for j in range(n, width):
        cost[j] = Fraction(0)
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # cannot happen: phase one is bounded below by zero
            raise ArithmeticError("unbounded phase-one objective")
        piv_i = best[1]
        prow = rows[piv_i]
        pv = prow[enter]
        if pv != 1:
            prow = rows[piv_i] = [v / pv for v in prow]
        for i, r in enumerate(rows):
            if i != piv_i and r[enter]:
                f = r[enter]
                rows[i] = [a - f * c for a, c in zip(r, prow)]
        if cost[enter]:
            f = cost[enter]
            cost = [a - f * c for a, c in zip(cost, prow)]
        basis[piv_i] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][-1]
    return x


def in_convex_hull(point: Sequence[int], points: Sequence[Sequence[int]]) -> bool:
    """Decide whether `point` is a convex combination of `points`."""
    if not points:
        return False
    d = len(point)
    A = [[p[i] for p in points] for i in range(d)]
    A.append([1] * len(points))
    return feasible_point(A, list(point) + [1]) is not None


def positive_direction(weights: Sequence[Sequence[int]]) -> Optional[list[Fraction]]:
    """Rational s with s.w >= 1 for every weight w, or None if none exists."""
    d = len(weights[0])
    k = len(weights)
    # variables: s_plus (d), s_minus (d), slack (k);  s.w - t = 1
    A = []
    for i, w in enumerate(weights):
        A.append(list(w) + [-v for v in w] + [-int(j == i) for j in range(k)])
    x = feasible_point(A, [1] * k)
    if x is None:
        return None
    return [x[i] - x[d + i] for i in range(d)]
