"""Weight functions of the B^- x GL_k orbits in Hom(C^k, C^n)."""
from __future__ import annotations

import functools
import itertools
import math
from typing import Iterable, Optional

from .algebra import (
    LaurentPolynomial,
    NonCancellingDenominator,
    RationalExpression,
    VariableTable,
    rat_equal,
    symmetrize,
)
from .kernel import psi
from .parallel import pmap


@functools.lru_cache(maxsize=None)
def matrix_table(k: int, n: int) -> VariableTable:
    """a1..ak (one symmetrization block) followed by b1..bn."""
    names = [f"a{u}" for u in range(1, k + 1)] + [f"b{v}" for v in range(1, n + 1)]
    blocks = [tuple(range(k))] if k else []
    return VariableTable(names, blocks)


class OrbitIndex:
    """(k, n, J) with J = {j_1 < ... < j_d} a subset of {1..n}, d <= k <= n."""

    __slots__ = ("k", "n", "J")

    def __init__(self, k: int, n: int, J: Iterable[int]):
        J = tuple(sorted(int(x) for x in J))
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        if len(set(J)) != len(J) or any(not 1 <= x <= n for x in J):
            raise ValueError(f"J={J} is not a subset of 1..{n}")
        if len(J) > k:
            raise ValueError(f"|J|={len(J)} exceeds k={k}")
        self.k, self.n, self.J = k, n, J

    @property
    def d(self) -> int:
        return len(self.J)

    @property
    def table(self) -> VariableTable:
        return matrix_table(self.k, self.n)

    def __eq__(self, other):
        return isinstance(other, OrbitIndex) and (self.k, self.n, self.J) == (other.k, other.n, other.J)

    def __hash__(self):
        return hash((self.k, self.n, self.J))

    def __repr__(self):
        return f"OrbitIndex(k={self.k}, n={self.n}, J={list(self.J)})"

    def __reduce__(self):
        return (OrbitIndex, (self.k, self.n, self.J))


def all_orbits(k: int, n: int) -> list[OrbitIndex]:
    """Every J with |J| <= k, ordered by size then lexicographically."""
    return [OrbitIndex(k, n, J) for d in range(k + 1) for J in itertools.combinations(range(1, n + 1), d)]


def u_function(idx: OrbitIndex) -> RationalExpression:
    table = idx.table
    a = [table.gen(f"a{u}") for u in range(1, idx.k + 1)]
    b = [table.gen(f"b{v}") for v in range(1, idx.n + 1)]
    y = table.y
    num = table.one()
    for u in range(1, idx.k + 1):
        own = idx.J[u - 1] if u <= idx.d else None
        for v in range(1, idx.n + 1):
            num = num * psi(own, v, a[u - 1] * b[v - 1] ** -1)
    dens = []
    for u in range(1, idx.d + 1):
        for v in range(u + 1, idx.k + 1):
            ratio = a[v - 1] * a[u - 1] ** -1
            num = num * (1 + y * ratio)
            dens.append(1 - ratio)
    return RationalExpression(num, dens)


@functools.lru_cache(maxsize=256)
def weight_function_matrix(idx: OrbitIndex) -> LaurentPolynomial:
    """(1/(k-d)!) times the S_k orbit sum of U; always a Laurent polynomial."""
    w = symmetrize(u_function(idx), idx.table.blocks, math.factorial(idx.k - idx.d))
    if not isinstance(w, LaurentPolynomial):
        raise NonCancellingDenominator(f"weight function of {idx} kept a denominator")
    return w


def lambda_y_hom(k: int, n: int) -> LaurentPolynomial:
    """prod over u, v of (1 + y a_u/b_v)."""
    table = matrix_table(k, n)
    out = table.one()
    for u in range(1, k + 1):
        for v in range(1, n + 1):
            out = out * (1 + table.y * table.gen(f"a{u}") * table.gen(f"b{v}") ** -1)
    return out


def orbit_sum_identity(k: int, n: int, threads: Optional[int] = None) -> tuple[bool, LaurentPolynomial]:
    """Sum of W_{k,n,J} over every J against the product of (1 + y a_u/b_v); returns (ok, residual)."""
    ws = pmap(weight_function_matrix, all_orbits(k, n), threads)
    total = matrix_table(k, n).zero()
    for w in ws:
        total = total + w
    residual = total - lambda_y_hom(k, n)
    return residual.is_zero(), residual


def fixed_point_sum(idx: OrbitIndex) -> RationalExpression:
    """W_{k,n,J} rebuilt as a sum over the cosets of S_k / S_{k-d}.

    Each coset is an ordered choice of which a-variables fill the d pivot
    columns.  The term is assembled from its tangent weights: vertical
    directions, free entries below the pivots, forced zeros, and the pivots.
    """
    k, n, J, d = idx.k, idx.n, idx.J, idx.d
    table = idx.table
    y = table.y
    b = [None] + [table.gen(f"b{v}") for v in range(1, n + 1)]
    terms = []
    for head in itertools.permutations(range(1, k + 1), d):
        tail = [u for u in range(1, k + 1) if u not in head]
        a = [None] + [table.gen(f"a{u}") for u in list(head) + tail]
        num = table.one()
        den = []
        for u in range(1, d + 1):
            for v in range(u + 1, k + 1):
                num = num * (1 + y * a[v] * a[u] ** -1)
                den.append(1 - a[v] * a[u] ** -1)
            for v in range(J[u - 1] + 1, n + 1):
                num = num * (1 + y * a[u] * b[v] ** -1)
            for v in range(1, J[u - 1]):
                num = num * (1 - a[u] * b[v] ** -1)
            num = num * (1 + y) * a[u] * b[J[u - 1]] ** -1
        for u in range(d + 1, k + 1):
            for v in range(1, n + 1):
                num = num * (1 - a[u] * b[v] ** -1)
        terms.append(RationalExpression(num, den))
    return RationalExpression.sum(terms)


def localization_identity_check(idx: OrbitIndex) -> bool:
    return rat_equal(fixed_point_sum(idx), weight_function_matrix(idx))


def is_symmetric(p: LaurentPolynomial, k: int) -> bool:
    """Invariance under every adjacent transposition of a1..ak."""
    arity = p.table.arity
    for i in range(k - 1):
        perm = list(range(arity))
        perm[i], perm[i + 1] = i + 1, i
        if p.permute(perm) != p:
            return False
    return True
