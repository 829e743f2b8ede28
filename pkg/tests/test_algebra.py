import pickle

import pytest

from mchern.algebra import (
    XI,
    LaurentPolynomial,
    NonCancellingDenominator,
    NotDivisible,
    RationalExpression,
    TableMismatch,
    VariableTable,
    arith,
    divides,
    exact_div,
    lambda_class,
    parse_expr,
    rat_equal,
    symmetrize,
    toric_substitute,
)

T = VariableTable(["a", "b"])
a, b, y = T.gen("a"), T.gen("b"), T.y


def P(text, table=T):
    return parse_expr(text, table)


class TestVariableTable:
    def test_duplicate_names(self):
        with pytest.raises(ValueError):
            VariableTable(["a", "a"])

    def test_reserved_names(self):
        with pytest.raises(ValueError):
            VariableTable(["y"])

    def test_overlapping_blocks(self):
        with pytest.raises(ValueError):
            VariableTable(["a", "b", "c"], [(0, 1), (1, 2)])

    def test_non_contiguous_block(self):
        with pytest.raises(ValueError):
            VariableTable(["a", "b", "c"], [(0, 2)])

    def test_pickle(self):
        t = VariableTable(["a1", "a2", "b1"], [(0, 1)])
        assert pickle.loads(pickle.dumps(t)) == t


class TestLaurent:
    def test_zero_is_empty(self):
        assert len(T.zero()) == 0 and not T.zero()
        assert (a - a).is_zero()

    def test_identities(self):
        p = P("(1+y)/a - 3*b^2")
        assert p + 0 == p and p * 1 == p

    def test_distributivity_example(self):
        got = (1 + y * a ** -1) * (1 + y * b ** -1)
        assert got == P("1 + y/a + y/b + y^2/(a*b)")

    def test_atoms_sum(self):
        assert arith(P("1 - 1/a"), P("(1+y)/a"), "add") == P("1 + y/a")

    def test_arith_ops(self):
        p, q = P("a + y"), P("b - 1")
        assert arith(p, q, "mul") == p * q
        assert arith(p, None, "neg") == -p
        with pytest.raises(ValueError):
            arith(p, q, "pow")

    def test_cross_table(self):
        other = VariableTable(["a", "b"], [(0, 1)])
        with pytest.raises(TableMismatch):
            other.gen("a") + a

    def test_canonical_string(self):
        p = P("(1+y)^2*a^3/b^2 - 7*a + y")
        assert p.to_str() == "(1+2*y+y^2)*a^3*b^-2 + (-7)*a^1 + (y)"

    def test_q_display(self):
        assert P("(1+y)*a").to_str("q") == "(1-q)*a^1"

    @pytest.mark.parametrize("text", ["0", "1", "y^3*a^-2*b^5 - 2", "(1-y)*(a+b)^3/(a*b)"])
    def test_round_trip(self, text):
        p = P(text)
        assert LaurentPolynomial.parse(p.to_str(), T) == p
        assert LaurentPolynomial.parse(p.to_str(), T).to_str() == p.to_str()
        assert LaurentPolynomial.parse(p.to_str("q"), T, coeff_var="q") == p

    def test_negative_power_of_non_unit(self):
        with pytest.raises(ArithmeticError):
            (1 + a) ** -1

    def test_y_exponents_nonnegative(self):
        with pytest.raises(ValueError):
            LaurentPolynomial.parse("(y^-1)*a^1", T)
        assert isinstance(P("1/y"), RationalExpression)

    def test_substitute_and_permute(self):
        p = P("a^2/b + y")
        assert p.permute([1, 0]) == P("b^2/a + y")
        assert p.substitute([a * b, b], T) == P("a^2*b + y")


class TestExactDiv:
    def test_built_product(self):
        p = P("(1+y/a)*(1-1/b)")
        assert exact_div(p, P("1+y/a")) == P("1-1/b")

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            exact_div(P("1+y/a"), P("1-1/a"))
        assert not divides(P("1-1/a"), P("1+y/a"))

    def test_zero_numerator(self):
        assert exact_div(T.zero(), P("1+a")).is_zero()

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            exact_div(a, T.zero())

    def test_quotient_would_need_negative_y(self):
        with pytest.raises(NotDivisible):
            exact_div(T.one(), y * T.one())

    def test_integer_coefficients_only(self):
        with pytest.raises(NotDivisible):
            exact_div(P("a + 1"), T.const(2))


class TestRational:
    def test_unit_absorbed(self):
        r = RationalExpression(T.one(), [1 - a])
        assert r.factors() == [1 - a ** -1]
        assert r.num == -a ** -1
        assert rat_equal(r, RationalExpression(-a ** -1, [1 - a ** -1]))

    def test_rat_equal_examples(self):
        assert rat_equal(RationalExpression(1 - a ** -1, [1 - a ** -1]), T.one())
        assert not rat_equal(P("(1+y)/a"), P("1 + y/a"))

    def test_denominators_stay_factored(self):
        r = P("1/(1-a)") + P("1/(1+y*b)")
        assert len(r.factors()) == 2

    def test_cancel_and_demote(self):
        r = RationalExpression((1 - a) * (1 + b), [1 - a])
        assert r.cancel().to_polynomial() == 1 + b

    def test_non_cancelling(self):
        with pytest.raises(NonCancellingDenominator):
            RationalExpression(T.one(), [1 - a]).to_polynomial()

    def test_zero_factor(self):
        with pytest.raises(ZeroDivisionError):
            RationalExpression(T.one(), [T.zero()])

    def test_substitute_rejects_vanishing_denominator(self):
        r = RationalExpression(T.one(), [1 - a * b ** -1])
        with pytest.raises(NonCancellingDenominator):
            r.substitute([b, b], T)

    def test_string(self):
        r = RationalExpression((1 + y) * a, [1 + y * a * b ** -1])
        assert r.to_str() == "((1+y)*a^1) / (((y)*a^1*b^-1 + (1)))"


class TestToric:
    U = VariableTable(["a1", "a2", "b1"])

    def test_monomial(self):
        p = parse_expr("a1*a2/b1", self.U)
        assert toric_substitute(p, (1, 1, -1)) == XI.monomial((3,))

    def test_cancellation(self):
        assert toric_substitute(P("1 - a/b"), (1, 1)).is_zero()

    def test_plane_direction(self):
        p = P("(1-1/(a*b))*(1-b^2/a^3)")
        assert toric_substitute(p, (1, 0)) == parse_expr("(1-1/xi)*(1-1/xi^3)", XI)

    def test_arity(self):
        with pytest.raises(ValueError):
            toric_substitute(a, (1,))


class TestSymmetrize:
    S = VariableTable(["a1", "a2", "b1"], [(0, 1)])

    def test_trivial_group(self):
        u = parse_expr("(1+y)*a1/b1", VariableTable(["a1", "b1"], [(0,)]))
        assert symmetrize(u) == u

    def test_two_variables(self):
        assert symmetrize(self.S.gen("a1")) == parse_expr("a1 + a2", self.S)

    def test_divisor(self):
        assert symmetrize(self.S.gen("a1") + self.S.gen("a2"), divisor=2) == parse_expr("a1 + a2", self.S)
        with pytest.raises(ArithmeticError):
            symmetrize(self.S.gen("a1"), divisor=2)

    def test_demotes_when_denominators_cancel(self):
        a1, a2 = self.S.gen("a1"), self.S.gen("a2")
        u = RationalExpression(a1, [1 - a2 * a1 ** -1])
        assert isinstance(symmetrize(u), LaurentPolynomial)


class TestLambda:
    def test_empty(self):
        assert lambda_class(T, [], "y") == T.one()
        assert lambda_class(T, [], "minus_one") == T.one()

    def test_plane_cotangent(self):
        got = lambda_class(T, [(1, 1), (3, -2)], "y", dual=True)
        assert got == P("(1 + y/(a*b))*(1 + y/(a^3*b^-2))")

    def test_not_dual(self):
        assert lambda_class(T, [(1, 0)], "minus_one", dual=False) == 1 - a

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            lambda_class(T, [(1, 0)], "plus")


class TestParse:
    def test_q_alias(self):
        assert P("q") == -y

    @pytest.mark.parametrize("bad", ["a +", "c", "a**b", "__import__('os')", "a.b", "1.5"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            P(bad)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            P("1/(a-a)")
