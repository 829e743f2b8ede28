"""Published reference values, each as a named zero-argument check.

The expected sides are typed in as plain expressions and parsed, so they do not
share code paths with the constructions they are compared against.
"""
from __future__ import annotations

from typing import Callable

from .algebra import (
    XI,
    RationalExpression,
    VariableTable,
    lambda_class,
    parse_expr,
    rat_equal,
    symmetrize,
    toric_substitute,
)
from .flag import (
    CompositionIndex,
    FlagShape,
    check_axioms,
    enumerate_indices,
    mc_schubert,
    restrict,
    restriction,
    weight_function_flag,
)
from .matrix import OrbitIndex, matrix_table, orbit_sum_identity, u_function, weight_function_matrix
from .polytope import (
    Y_TABLE,
    ConvexPolytope,
    is_positive,
    limit_at_infinity,
    member,
    newton_polytope,
    punctured_containment,
)
from .rankloci import phi_resolution, q_binomial, segre_sieve, tau_rank_motivic

LINE = VariableTable(["a"])
PLANE = VariableTable(["a", "b"])


def _line(expr):
    return parse_expr(expr, LINE)


def _plane(expr):
    return parse_expr(expr, PLANE)


# -- one-dimensional atoms --------------------------------------------------------

def atom_point():
    return lambda_class(LINE, [(1,)], "minus_one", dual=True) == _line("1 - 1/a")


def atom_line():
    point = lambda_class(LINE, [(1,)], "minus_one", dual=True)
    return point + _line("(1+y)/a") == _line("1 + y/a")


def atom_punctured_line():
    whole = lambda_class(LINE, [(1,)], "y", dual=True)
    point = lambda_class(LINE, [(1,)], "minus_one", dual=True)
    return whole - point == _line("(1+y)/a")


# -- the plane with weights ab and a^3 b^-2 -------------------------------------------

W1, W2 = (1, 1), (3, -2)


def plane_classes() -> dict:
    lam_y = {w: lambda_class(PLANE, [w], "y") for w in (W1, W2)}
    lam_m = {w: lambda_class(PLANE, [w], "minus_one") for w in (W1, W2)}
    whole = lam_y[W1] * lam_y[W2]
    X = lam_y[W1] * lam_m[W2]
    Y = lam_m[W1] * lam_y[W2]
    origin = lam_m[W1] * lam_m[W2]
    return {"C2": whole, "X": X, "Y": Y, "0": origin,
            "X-0": X - origin, "Y-0": Y - origin, "C2-0": whole - origin}


PLANE_EXPECTED = {
    "C2": "(1 + y/(a*b)) * (1 + y/(a^3*b^-2))",
    "X": "(1 + y/(a*b)) * (1 - 1/(a^3*b^-2))",
    "Y": "(1 - 1/(a*b)) * (1 + y/(a^3*b^-2))",
    "0": "(1 - 1/(a*b)) * (1 - 1/(a^3*b^-2))",
    "X-0": "(1+y)/(a*b) * (1 - 1/(a^3*b^-2))",
    "Y-0": "(1 - 1/(a*b)) * (1+y)/(a^3*b^-2)",
    "C2-0": "(y^2-1)/(a^4*b^-1) + (y+1)/(a*b) + (y+1)/(a^3*b^-2)",
}

PLANE_POLYTOPES = {
    "X-0": [(-4, 1), (-1, -1)],
    "Y-0": [(-4, 1), (-3, 2)],
    "C2-0": [(-4, 1), (-1, -1), (-3, 2)],
}


def plane_seven_classes():
    got = plane_classes()
    return all(got[k] == _plane(v) for k, v in PLANE_EXPECTED.items())


def plane_lambda_y():
    return lambda_class(PLANE, [W1, W2], "y", dual=True) == _plane(PLANE_EXPECTED["C2"])


def plane_polytopes():
    got = plane_classes()
    return all(newton_polytope(got[k]) == ConvexPolytope(v) for k, v in PLANE_POLYTOPES.items())


def plane_punctured_containment():
    got = plane_classes()
    big = newton_polytope(lambda_class(PLANE, [W1, W2], "minus_one"))
    return all(punctured_containment(newton_polytope(got[k]), big) for k in PLANE_POLYTOPES)


def plane_origin_outside():
    return not member((0, 0), newton_polytope(plane_classes()["C2-0"]))


def plane_positive_witness():
    ok, s = is_positive([W1, W2])
    return ok and all(s[0] * w[0] + s[1] * w[1] > 0 for w in (W1, W2))


def plane_direction_10():
    # the direction s = (1, 0) itself
    pos = all(w[0] > 0 for w in (W1, W2))
    sub = toric_substitute(plane_classes()["0"], (1, 0))
    return pos and sub == parse_expr("(1 - 1/xi) * (1 - 1/xi^3)", XI)


# -- the hyperbolic action on the plane ------------------------------------------------

def hyperbolic_class():
    whole = lambda_class(LINE, [(1,), (-1,)], "y")
    origin = lambda_class(LINE, [(1,), (-1,)], "minus_one")
    return whole - origin


def hyperbolic_punctured_plane():
    return hyperbolic_class() == _line("(y+1)/a + (y^2-1) + (y+1)*a")


def hyperbolic_polytope():
    return newton_polytope(hyperbolic_class()) == ConvexPolytope([(-1,), (1,)])


def hyperbolic_containment_fails():
    small = newton_polytope(hyperbolic_class())
    big = newton_polytope(lambda_class(LINE, [(1,), (-1,)], "minus_one"))
    return member((0,), small) and not punctured_containment(small, big)


def hyperbolic_not_positive():
    return is_positive([(1,), (-1,)]) == (False, None)


# -- limits at infinity ----------------------------------------------------------------

def limit_positive_direction():
    return limit_at_infinity(parse_expr("(1+y*xi)/(1-xi)", XI)) == parse_expr("-y", Y_TABLE)


def limit_negative_direction():
    return limit_at_infinity(parse_expr("(1+y/xi)/(1-1/xi)", XI)) == parse_expr("1", Y_TABLE)


# -- matrix Schubert weight functions ------------------------------------------------------

def _mat(k, n, expr):
    return parse_expr(expr, matrix_table(k, n))


def w_1_2_first():
    return weight_function_matrix(OrbitIndex(1, 2, [1])) == _mat(1, 2, "(1+y)*(a1/b1)*(1+y*a1/b2)")


def w_1_2_second():
    return weight_function_matrix(OrbitIndex(1, 2, [2])) == _mat(1, 2, "(1+y)*(1-a1/b1)*a1/b2")


def w_1_2_empty():
    return weight_function_matrix(OrbitIndex(1, 2, [])) == _mat(1, 2, "(1-a1/b1)*(1-a1/b2)")


def w_1_n_closed_form(n: int, u: int) -> str:
    parts = ["(1+y)"] + [f"(1-a1/b{i})" for i in range(1, u)] + [f"(a1/b{u})"]
    parts += [f"(1+y*a1/b{i})" for i in range(u + 1, n + 1)]
    return "*".join(parts)


def w_1_n_all():
    return all(weight_function_matrix(OrbitIndex(1, n, [u])) == _mat(1, n, w_1_n_closed_form(n, u))
               for n in range(1, 5) for u in range(1, n + 1))


W_2_2 = ("(1+y)^2*(a1*a2/(b1*b2))*(y^2*a1*a2/(b1*b2)"
         " + y*(-a1*a2/(b1*b2) + a1/b1 + a1/b2 + a2/b1 + a2/b2 - 1) + 1)")

W_2_4 = ("(1+y)^2*(1-a1/b1)*(1+y*a1/b4)*(1-a2/b1)*(1+y*a2/b4)*a1*a2"
         "*((1-y)/(b2*b3) + (y^2-y)*a1*a2/(b2^2*b3^2) + y*(a1+a2)*(1/(b2*b3^2) + 1/(b2^2*b3)))")


def w_2_2_full():
    return weight_function_matrix(OrbitIndex(2, 2, [1, 2])) == _mat(2, 2, W_2_2)


def w_2_2_symmetrize():
    return symmetrize(u_function(OrbitIndex(2, 2, [1, 2]))) == _mat(2, 2, W_2_2)


def w_2_4_middle():
    return weight_function_matrix(OrbitIndex(2, 4, [2, 3])) == _mat(2, 4, W_2_4)


def orbit_sum_1_2():
    return orbit_sum_identity(1, 2)[0]


# -- the Grassmannian of 2-planes in C^4 ----------------------------------------------------------

GR24 = FlagShape([2, 2])
GR24_INDEX = CompositionIndex([[1, 3], [2, 4]])

GR24_U1 = ("(1+y)^2*(a1*a2/(b1*b3))*(1+y*a1/b2)*(1+y*a1/b3)*(1+y*a1/b4)*(1-a2/b1)*(1-a2/b2)"
           "*(1+y*a2/b4)*(1+y*a2/a1)/(1-a2/a1)")
GR24_SELF = "(1+y*b1/b2)*(1+y*b1/b4)*(1-b3/b2)*(1+y*b3/b4)"
GR24_FAR = ("(1+y)*b4/(b1^2*b2^2)*(y^2*(b1*b2*b3 - b3^2*b4)"
            " + y*(2*b1*b2*b3 + b1*b2*b4 - b1*b3*b4 + b2^2*b3 - b2*b3^2 - 2*b2*b3*b4)"
            " + b1*b2^2 - b2*b3*b4)")
GR24_BIG = "(1-b3/b1)*(1-b3/b2)*(1-b4/b1)*(1-b4/b2)"


def _gr(expr):
    return parse_expr(expr, GR24.beta_table)


def gr24_index_count():
    idx = enumerate_indices(GR24)
    return len(idx) == 6 and GR24_INDEX in idx and len(enumerate_indices(FlagShape([1, 1, 1]))) == 6


def gr24_u_term():
    U = weight_function_flag(GR24_INDEX).U
    expected = RationalExpression.coerce(parse_expr(GR24_U1, GR24.table))
    swapped = expected.permute([1, 0, 2, 3, 4, 5])
    return rat_equal(U, expected) and rat_equal(U.permute([1, 0, 2, 3, 4, 5]), swapped)


def gr24_restrictions():
    wt = weight_function_flag(GR24_INDEX).W_tilde
    cases = [("1,2/3,4", "0"), ("1,3/2,4", GR24_SELF), ("3,4/1,2", GR24_FAR)]
    return all(restrict(wt, CompositionIndex.parse(J)) == _gr(v)
               and restriction(GR24_INDEX, CompositionIndex.parse(J)) == _gr(v) for J, v in cases)


def gr24_far_polytope():
    far = restriction(GR24_INDEX, CompositionIndex.parse("3,4/1,2"))
    return punctured_containment(newton_polytope(far), newton_polytope(_gr(GR24_BIG)))


def gr24_axioms():
    return check_axioms(mc_schubert(GR24_INDEX), GR24_INDEX).passed


# -- rank loci ----------------------------------------------------------------------------------

def _q(expr, k=2, n=2):
    return parse_expr(expr, matrix_table(k, n))


SEGRE_2_2_2 = "(1-a1/b1)*(1-a1/b2)*(1-a2/b1)*(1-a2/b2)/((1-q*a1/b1)*(1-q*a1/b2)*(1-q*a2/b1)*(1-q*a2/b2))"
SEGRE_2_2_0 = ("(q-1)^2/((1-q*a1/b1)*(1-q*a1/b2)*(1-q*a2/b1)*(1-q*a2/b2))*a1*a2/(b1*b2)"
               "*(q^2*a1*a2/(b1*b2) + q*(a1*a2/(b1*b2) - a1/b1 - a1/b2 - a2/b1 - a2/b2 + 1) + 1)")


def segre_full_rank_kernel():
    return rat_equal(segre_sieve(2, 2, 2), _q(SEGRE_2_2_2))


def segre_injective():
    return rat_equal(segre_sieve(2, 2, 0), _q(SEGRE_2_2_0))


def phi_top():
    return rat_equal(phi_resolution(2, 2, 2), _q(SEGRE_2_2_2))


def tau_1_2_0():
    expected = weight_function_matrix(OrbitIndex(1, 2, [1])) + weight_function_matrix(OrbitIndex(1, 2, [2]))
    return tau_rank_motivic(1, 2, 0) == expected and expected == _mat(
        1, 2, "(1+y)*(a1/b1)*(1+y*a1/b2) + (1+y)*(1-a1/b1)*a1/b2")


def qbinom_base():
    return all(q_binomial(a, 0) == (1,) for a in range(9))


GOLDENS: list[tuple[str, Callable[[], bool]]] = [
    ("atom: point in the line", atom_point),
    ("atom: line as point plus punctured line", atom_line),
    ("atom: punctured line", atom_punctured_line),
    ("plane: seven orbit-closure classes", plane_seven_classes),
    ("plane: lambda_y of the cotangent space", plane_lambda_y),
    ("plane: Newton polytopes", plane_polytopes),
    ("plane: punctured containment", plane_punctured_containment),
    ("plane: origin outside N(C2-0)", plane_origin_outside),
    ("plane: positivity witness", plane_positive_witness),
    ("plane: substitution along s=(1,0)", plane_direction_10),
    ("hyperbolic: punctured plane class", hyperbolic_punctured_plane),
    ("hyperbolic: Newton polytope [-1,1]", hyperbolic_polytope),
    ("hyperbolic: punctured containment fails", hyperbolic_containment_fails),
    ("hyperbolic: action not positive", hyperbolic_not_positive),
    ("limit: (1+y xi)/(1-xi) -> -y", limit_positive_direction),
    ("limit: (1+y/xi)/(1-1/xi) -> 1", limit_negative_direction),
    ("matrix: W(1,2,{1})", w_1_2_first),
    ("matrix: W(1,2,{2})", w_1_2_second),
    ("matrix: W(1,2,{})", w_1_2_empty),
    ("matrix: W(1,n,{u}) closed form, n<=4", w_1_n_all),
    ("matrix: W(2,2,{1,2})", w_2_2_full),
    ("matrix: symmetrized U(2,2,{1,2})", w_2_2_symmetrize),
    ("matrix: W(2,4,{2,3})", w_2_4_middle),
    ("matrix: orbit sum k=1 n=2", orbit_sum_1_2),
    ("grassmannian: index sets", gr24_index_count),
    ("grassmannian: U term and its swap", gr24_u_term),
    ("grassmannian: three restrictions", gr24_restrictions),
    ("grassmannian: far point polytope containment", gr24_far_polytope),
    ("grassmannian: axioms for 1,3/2,4", gr24_axioms),
    ("rank loci: ts for r=2, k=n=2", segre_full_rank_kernel),
    ("rank loci: ts for r=0, k=n=2", segre_injective),
    ("rank loci: Phi top term", phi_top),
    ("rank loci: tau for k=1 n=2 r=0", tau_1_2_0),
    ("rank loci: q-binomial base row", qbinom_base),
]


def run_goldens() -> list[tuple[str, bool, str]]:
    """(name, passed, error text) for every golden check."""
    out = []
    for name, check in GOLDENS:
        try:
            ok = bool(check())
            err = ""
        except Exception as exc:  # a crash is a failed golden, reported not raised
            ok, err = False, f"{type(exc).__name__}: {exc}"
        out.append((name, ok, err))
    return out
