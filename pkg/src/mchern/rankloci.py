"""Motivic Chern and Segre classes of the rank loci in Hom(C^k, C^n).

Throughout q = -y.  Polynomials in q alone are plain coefficient lists
(ascending powers); everything else is built over matrix_table(k, n).
"""
from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from typing import Optional, Sequence

from .algebra import (
    LaurentPolynomial,
    NonCancellingDenominator,
    RationalExpression,
    VariableTable,
    normalize_factor,
    rat_equal,
    ypoly_str,
)
from .matrix import OrbitIndex, matrix_table, weight_function_matrix
from .parallel import pmap

QPoly = tuple[int, ...]


def _trim(c: Sequence[int]) -> QPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def qpoly_add(p: Sequence[int], r: Sequence[int]) -> QPoly:
    m = max(len(p), len(r))
    return _trim([(p[i] if i < len(p) else 0) + (r[i] if i < len(r) else 0) for i in range(m)])


def qpoly_mul(p: Sequence[int], r: Sequence[int]) -> QPoly:
    if not p or not r:
        return ()
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return _trim(out)


def qpoly_eval(p: Sequence[int], q: int) -> int:
    return sum(c * q ** i for i, c in enumerate(p))


def qpoly_str(p: Sequence[int]) -> str:
    return ypoly_str(p, "q")


class QBinomialTable:
    """Memoized Gaussian binomials from C(a+1, r) = q^r C(a, r) + C(a, r-1)."""

    def __init__(self):
        self._memo: dict[tuple[int, int], QPoly] = {}

    def __call__(self, a: int, r: int) -> QPoly:
        if r < 0 or a < 0 or r > a:
            return ()
        if r == 0 or r == a:
            return (1,)
        key = (a, r)
        hit = self._memo.get(key)
        if hit is None:
            shifted = (0,) * r + self(a - 1, r)
            hit = self._memo[key] = qpoly_add(shifted, self(a - 1, r - 1))
        return hit


q_binomial = QBinomialTable()


def qpoly_to_laurent(p: Sequence[int], table: VariableTable) -> LaurentPolynomial:
    """Materialize a polynomial in q over `table` with q = -y."""
    return LaurentPolynomial.constant(table, [c if i % 2 == 0 else -c for i, c in enumerate(p)])


def _check_locus(k: int, n: int, r: int):
    if not 0 <= r <= k <= n:
        raise ValueError(f"need 0 <= r <= k <= n, got k={k}, n={n}, r={r}")


def _ratio(table, u: int, v: int) -> LaurentPolynomial:
    return table.gen(f"a{u}") * table.gen(f"b{v}") ** -1


def tau_rank_motivic(k: int, n: int, r: int, threads: Optional[int] = None) -> LaurentPolynomial:
    """Sum of W_{k,n,J} over all J with |J| = k - r."""
    _check_locus(k, n, r)
    idxs = [OrbitIndex(k, n, J) for J in itertools.combinations(range(1, n + 1), k - r)]
    total = matrix_table(k, n).zero()
    for w in pmap(weight_function_matrix, idxs, threads):
        total = total + w
    return total


def lambda_y_factors(k: int, n: int) -> list[LaurentPolynomial]:
    table = matrix_table(k, n)
    return [1 + table.y * _ratio(table, u, v) for u in range(1, k + 1) for v in range(1, n + 1)]


def segre_class(tau, k: int, n: int) -> RationalExpression:
    """tau / prod over u, v of (1 + y a_u/b_v), denominator kept factored."""
    return RationalExpression.coerce(tau) * RationalExpression(matrix_table(k, n).one(), lambda_y_factors(k, n))


def phi_resolution(a: int, k: int, n: int) -> RationalExpression:
    """Sum over a-subsets I of 1..k of the fixed-point terms of the kernel resolution.

    The (1 - a_u/a_w) denominators must cancel across the sum; anything left
    over besides (1 + y a_u/b_v) factors is an error.
    """
    if not 0 <= a <= k <= n:
        raise ValueError(f"need 0 <= a <= k <= n, got a={a}, k={k}, n={n}")
    table = matrix_table(k, n)
    y = table.y
    terms = []
    for I in itertools.combinations(range(1, k + 1), a):
        rest = [w for w in range(1, k + 1) if w not in I]
        num = table.one()
        den = []
        for u in I:
            for v in range(1, n + 1):
                x = _ratio(table, u, v)
                num = num * (1 - x)
                den.append(1 + y * x)
            for w in rest:
                x = table.gen(f"a{u}") * table.gen(f"a{w}") ** -1
                num = num * (1 + y * x)
                den.append(1 - x)
        terms.append(RationalExpression(num, den))
    total = RationalExpression.sum(terms).cancel()
    allowed = Counter(normalize_factor(f)[0] for f in lambda_y_factors(k, n))
    if total.den - allowed:
        left = ", ".join(str(f) for f in (total.den - allowed))
        raise NonCancellingDenominator(f"Phi^{a}_{{{k},{n}}} kept factors {left}")
    return total


def sieve_coefficient(a: int, r: int) -> QPoly:
    """(-1)^(a-r) q^((a-r)(a-r-1)/2) C(a, r)_q."""
    m = a - r
    sign = -1 if m % 2 else 1
    shift = m * (m - 1) // 2
    return tuple(sign * c for c in (0,) * shift + q_binomial(a, r))


def segre_sieve(k: int, n: int, r: int) -> RationalExpression:
    _check_locus(k, n, r)
    table = matrix_table(k, n)
    parts = [qpoly_to_laurent(sieve_coefficient(a, r), table) * phi_resolution(a, k, n) for a in range(r, k + 1)]
    return RationalExpression.sum(parts).cancel()


def verify_rank_equality(k: int, n: int, r: int, threads: Optional[int] = None) -> bool:
    return rat_equal(segre_class(tau_rank_motivic(k, n, r, threads), k, n), segre_sieve(k, n, r))


def _qmatrix(kmax: int, entry) -> list[list[QPoly]]:
    return [[entry(a, r) for r in range(1, kmax + 1)] for a in range(1, kmax + 1)]


def sieve_matrix_inverse_check(kmax: int) -> bool:
    """[C(a,r)_q] and [(-1)^(a-r) q^((a-r)(a-r-1)/2) C(a,r)_q], 1 <= a, r <= kmax, are mutually inverse."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    A = _qmatrix(kmax, q_binomial)
    B = _qmatrix(kmax, sieve_coefficient)
    for X, Y in ((A, B), (B, A)):
        for i in range(kmax):
            for j in range(kmax):
                acc: QPoly = ()
                for m in range(kmax):
                    acc = qpoly_add(acc, qpoly_mul(X[i][m], Y[m][j]))
                if acc != ((1,) if i == j else ()):
                    return False
    return True


@functools.lru_cache(maxsize=None)
def reduced_table(k: int, n: int) -> VariableTable:
    """a1..a(k-1), b1..b(n-1), t."""
    names = [f"a{u}" for u in range(1, k)] + [f"b{v}" for v in range(1, n)] + ["t"]
    return VariableTable(names, [tuple(range(k - 1))] if k > 1 else [])


def supersymmetry_check(k: int, n: int, r: int) -> bool:
    """segre_sieve(k, n, r) at a_k = b_n = t equals segre_sieve(k-1, n-1, r).

    For r = k the smaller locus is empty and the expected value is 0.
    """
    _check_locus(k, n, r)
    if k < 1:
        raise ValueError("supersymmetry needs k >= 1")
    target = reduced_table(k, n)
    t = target.gen("t")
    big = matrix_table(k, n)
    images = [target.gen(nm) if nm in target else t for nm in big.names]
    lhs = segre_sieve(k, n, r).substitute(images, target)
    if r <= k - 1:
        small = matrix_table(k - 1, n - 1)
        rhs = segre_sieve(k - 1, n - 1, r).substitute([target.gen(nm) for nm in small.names], target)
    else:
        rhs = RationalExpression.coerce(target.zero())
    return rat_equal(lhs, rhs)


def euler_check(a: int, r: int) -> bool:
    """C(a, r)_q at q = 1 is the ordinary binomial coefficient."""
    return qpoly_eval(q_binomial(a, r), 1) == math.comb(a, r)
