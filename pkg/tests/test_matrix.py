import pytest

from mchern.algebra import parse_expr
from mchern.matrix import (
    OrbitIndex,
    all_orbits,
    fixed_point_sum,
    is_symmetric,
    lambda_y_hom,
    localization_identity_check,
    matrix_table,
    orbit_sum_identity,
    u_function,
    weight_function_matrix,
)


class TestOrbitIndex:
    @pytest.mark.parametrize("k, n, J", [(3, 2, []), (1, 2, [3]), (1, 3, [1, 2]), (2, 3, [1, 1]), (-1, 2, [])])
    def test_invalid(self, k, n, J):
        with pytest.raises(ValueError):
            OrbitIndex(k, n, J)

    def test_sorted_and_hashable(self):
        assert OrbitIndex(2, 4, [3, 2]) == OrbitIndex(2, 4, (2, 3))
        assert len({OrbitIndex(2, 4, [3, 2]), OrbitIndex(2, 4, [2, 3])}) == 1

    def test_orbit_count(self):
        # sum over d <= k of C(n, d)
        assert len(all_orbits(2, 4)) == 1 + 4 + 6
        assert len(all_orbits(3, 3)) == 8


class TestWeightFunction:
    def test_u_of_square_case(self):
        u = u_function(OrbitIndex(2, 2, [1, 2]))
        assert len(u.factors()) == 1

    def test_zero_k(self):
        assert weight_function_matrix(OrbitIndex(0, 2, [])) == matrix_table(0, 2).one()

    @pytest.mark.parametrize("idx", all_orbits(2, 3) + all_orbits(3, 3) + all_orbits(2, 4), ids=repr)
    def test_symmetric_in_alpha(self, idx):
        assert is_symmetric(weight_function_matrix(idx), idx.k)

    def test_symmetric_k3_n4(self):
        for idx in all_orbits(3, 4)[::3]:
            assert is_symmetric(weight_function_matrix(idx), 3)

    def test_is_symmetric_detects_asymmetry(self):
        T = matrix_table(2, 2)
        assert not is_symmetric(T.gen("a1"), 2)

    def test_lambda_y_hom(self):
        assert lambda_y_hom(1, 2) == parse_expr("(1+y*a1/b1)*(1+y*a1/b2)", matrix_table(1, 2))


class TestLocalization:
    @pytest.mark.parametrize("idx", all_orbits(1, 3) + all_orbits(2, 3) + all_orbits(2, 4)[::2], ids=repr)
    def test_fixed_point_sum(self, idx):
        assert localization_identity_check(idx)

    def test_fixed_point_sum_is_rational_before_cancelling(self):
        s = fixed_point_sum(OrbitIndex(2, 2, [1]))
        assert s == weight_function_matrix(OrbitIndex(2, 2, [1]))


def test_orbit_sum_residual_reports_difference():
    ok, residual = orbit_sum_identity(1, 2)
    assert ok and residual.is_zero()
