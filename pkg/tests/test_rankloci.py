import math
from collections import Counter

import pytest

from mchern.algebra import normalize_factor, parse_expr, rat_equal
from mchern.matrix import lambda_y_hom, matrix_table
from mchern.rankloci import (
    QBinomialTable,
    lambda_y_factors,
    phi_resolution,
    qpoly_add,
    qpoly_eval,
    qpoly_mul,
    qpoly_str,
    qpoly_to_laurent,
    q_binomial,
    segre_class,
    segre_sieve,
    sieve_coefficient,
    sieve_matrix_inverse_check,
    supersymmetry_check,
    tau_rank_motivic,
)


class TestQPolys:
    def test_arithmetic(self):
        assert qpoly_add((1, 2), (0, -2)) == (1,)
        assert qpoly_mul((1, 1), (1, -1)) == (1, 0, -1)
        assert qpoly_mul((), (1,)) == ()
        assert qpoly_eval((1, 2, 3), 2) == 17

    def test_strings(self):
        assert qpoly_str(q_binomial(2, 1)) == "1+q"
        assert qpoly_str(q_binomial(4, 2)) == "1+q+2*q^2+q^3+q^4"

    def test_out_of_range(self):
        assert q_binomial(3, 4) == () and q_binomial(3, -1) == ()

    def test_fresh_table_agrees(self):
        t = QBinomialTable()
        assert all(t(a, r) == q_binomial(a, r) for a in range(7) for r in range(a + 1))

    def test_materialize_with_q_minus_y(self):
        T = matrix_table(1, 1)
        assert qpoly_to_laurent((1, 1), T) == parse_expr("1 - y", T)

    def test_sieve_coefficient(self):
        assert sieve_coefficient(2, 2) == (1,)
        assert sieve_coefficient(2, 1) == (-1, -1)
        assert sieve_coefficient(2, 0) == (0, 1)

    def test_inverse_check_rejects_zero(self):
        with pytest.raises(ValueError):
            sieve_matrix_inverse_check(0)


class TestRankLoci:
    @pytest.mark.parametrize("k, n", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)])
    def test_rank_strata_sum_to_lambda_y(self, k, n):
        total = matrix_table(k, n).zero()
        for r in range(k + 1):
            total = total + tau_rank_motivic(k, n, r)
        assert total == lambda_y_hom(k, n)

    def test_zero_locus(self):
        # r = k: only the zero map, class prod (1 - a_u/b_v)
        T = matrix_table(1, 2)
        assert tau_rank_motivic(1, 2, 1) == parse_expr("(1-a1/b1)*(1-a1/b2)", T)

    @pytest.mark.parametrize("a, k, n", [(a, k, n) for n in range(1, 4) for k in range(n + 1) for a in range(k + 1)])
    def test_phi_denominator_is_sub_multiset(self, a, k, n):
        phi = phi_resolution(a, k, n)
        allowed = Counter(normalize_factor(f)[0] for f in lambda_y_factors(k, n))
        assert not (phi.den - allowed)

    def test_phi_rejects_bad_range(self):
        with pytest.raises(ValueError):
            phi_resolution(3, 2, 2)

    def test_segre_class_keeps_factors(self):
        ts = segre_class(tau_rank_motivic(2, 2, 1), 2, 2)
        assert len(ts.factors()) == 4

    def test_bad_locus(self):
        with pytest.raises(ValueError):
            segre_sieve(2, 1, 0)
        with pytest.raises(ValueError):
            supersymmetry_check(0, 0, 0)

    def test_segre_text_in_q(self):
        assert segre_sieve(1, 1, 0).to_str("q") == "((1-q)*a1^1*b1^-1) / (((-q)*a1^1*b1^-1 + (1)))"

    @pytest.mark.parametrize("k, n, r", [(1, 1, 0), (1, 2, 0), (2, 2, 0), (2, 2, 1), (2, 3, 1), (1, 2, 1), (2, 2, 2)])
    def test_supersymmetry(self, k, n, r):
        assert supersymmetry_check(k, n, r)

    def test_supersymmetry_sees_wrong_target(self):
        from mchern.rankloci import reduced_table

        T = reduced_table(2, 2)
        big = matrix_table(2, 2)
        lhs = segre_sieve(2, 2, 1).substitute([T.gen(nm) if nm in T else T.gen("t") for nm in big.names], T)
        small = matrix_table(1, 1)
        wrong = segre_sieve(1, 1, 0).substitute([T.gen(nm) for nm in small.names], T)
        assert not rat_equal(lhs, wrong)

    def test_euler(self):
        from mchern.rankloci import euler_check

        assert all(euler_check(a, r) for a in range(8) for r in range(a + 1))

    def test_inverse_pair(self):
        assert sieve_matrix_inverse_check(5)


def test_gaussian_binomial_rows():
    for a in range(9):
        assert sum(sum(q_binomial(a, r)) for r in range(a + 1)) == sum(math.comb(a, r) for r in range(a + 1))
