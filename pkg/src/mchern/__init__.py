"""Exact motivic Chern class computations: Laurent polynomial algebra, Newton
polytopes, Schubert cells in partial flag varieties, matrix Schubert cells and
rank loci in Hom(C^k, C^n)."""
from .algebra import (
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
from .flag import (
    AxiomReport,
    CompositionIndex,
    FixedPointClass,
    FlagShape,
    check_axioms,
    enumerate_indices,
    fixed_point_weights,
    is_gkm,
    mc_schubert,
    restrict,
    restriction,
    uniqueness_search,
    weight_function_flag,
)
from .matrix import (
    OrbitIndex,
    localization_identity_check,
    matrix_table,
    orbit_sum_identity,
    weight_function_matrix,
)
from .polytope import (
    ConvexPolytope,
    Infinite,
    contains,
    is_n_small,
    is_positive,
    limit_at_infinity,
    member,
    minkowski,
    newton_polytope,
    punctured_containment,
    toric_limit,
)
from .rankloci import (
    phi_resolution,
    q_binomial,
    segre_class,
    segre_sieve,
    sieve_matrix_inverse_check,
    supersymmetry_check,
    tau_rank_motivic,
    verify_rank_equality,
)

__version__ = "0.1.0"
