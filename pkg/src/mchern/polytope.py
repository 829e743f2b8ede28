"""Newton polytopes of Laurent polynomials and the predicates built on them."""
from __future__ import annotations

import itertools
import math
from typing import Iterable, Optional, Sequence, Union

from .algebra import (
    XI,
    LaurentPolynomial,
    RationalExpression,
    VariableTable,
    exact_div,
    NotDivisible,
)
from .lp import in_convex_hull, positive_direction

Point = tuple[int, ...]

# coefficient ring of limit values: no alpha-variables, only y
Y_TABLE = VariableTable([])


class ConvexPolytope:
    """Convex hull of finitely many lattice points; no generators means the empty polytope."""

    __slots__ = ("dim", "generators", "_vertices")

    def __init__(self, generators: Iterable[Sequence[int]], dim: Optional[int] = None):
        gens = sorted({tuple(int(c) for c in g) for g in generators})
        if dim is None:
            if not gens:
                raise ValueError("empty polytope needs an explicit dimension")
            dim = len(gens[0])
        if any(len(g) != dim for g in gens):
            raise ValueError("generators of mixed dimension")
        self.dim = dim
        self.generators = tuple(gens)
        self._vertices = None

    @classmethod
    def point(cls, pt: Sequence[int]) -> "ConvexPolytope":
        return cls([pt])

    @classmethod
    def empty(cls, dim: int) -> "ConvexPolytope":
        return cls([], dim)

    def is_empty(self) -> bool:
        return not self.generators

    @property
    def vertices(self) -> tuple[Point, ...]:
        """Generators that are not convex combinations of the others, sorted."""
        if self._vertices is None:
            gens = self.generators
            if len(gens) <= 2:
                self._vertices = gens
            else:
                self._vertices = tuple(
                    g for i, g in enumerate(gens) if not in_convex_hull(g, gens[:i] + gens[i + 1:]))
        return self._vertices

    def bounding_box(self) -> tuple[Point, Point]:
        cols = list(zip(*self.generators))
        return tuple(min(c) for c in cols), tuple(max(c) for c in cols)

    def lattice_points(self) -> list[Point]:
        """All integer points of the polytope, in sorted order."""
        if self.is_empty():
            return []
        lo, hi = self.bounding_box()
        ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
        return [pt for pt in itertools.product(*ranges) if member(pt, self)]

    def __eq__(self, other):
        if not isinstance(other, ConvexPolytope):
            return NotImplemented
        return self.dim == other.dim and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        return f"ConvexPolytope({[list(v) for v in self.vertices]!r})"

    def to_json(self) -> dict:
        return {"generators": [list(g) for g in self.generators],
                "vertices": [list(v) for v in self.vertices]}


def _check_dim(a: int, b: int):
    if a != b:
        raise ValueError(f"dimension mismatch: {a} vs {b}")


def newton_polytope(p: LaurentPolynomial) -> ConvexPolytope:
    """Exponent vectors of the terms of p, y treated as a constant."""
    return ConvexPolytope(p.support(), p.table.arity)


def member(pt: Sequence[int], P: ConvexPolytope) -> bool:
    pt = tuple(pt)
    _check_dim(len(pt), P.dim)
    if P.is_empty():
        return False
    if pt in P.generators:
        return True
    lo, hi = P.bounding_box()
    if any(c < a or c > b for c, a, b in zip(pt, lo, hi)):
        return False
    # one LP over all generators is cheaper than pruning to vertices first
    pts = P._vertices if P._vertices is not None else P.generators
    return in_convex_hull(pt, pts)


def containment_failure(U: ConvexPolytope, V: ConvexPolytope) -> Optional[Point]:
    """A generator of U lying outside V, or None when U is inside V."""
    _check_dim(U.dim, V.dim)
    for g in U.generators:
        if not member(g, V):
            return g
    return None


def contains(U: ConvexPolytope, V: ConvexPolytope) -> bool:
    """True iff U is a subset of V."""
    return containment_failure(U, V) is None


def minkowski(U: ConvexPolytope, V: ConvexPolytope) -> ConvexPolytope:
    _check_dim(U.dim, V.dim)
    return ConvexPolytope((tuple(a + b for a, b in zip(u, v)) for u in U.vertices for v in V.vertices), U.dim)


def minkowski_all(polys: Iterable[ConvexPolytope], dim: int) -> ConvexPolytope:
    out = ConvexPolytope.point((0,) * dim)
    for P in polys:
        out = minkowski(out, P)
        out = ConvexPolytope(out.vertices, dim)
    return out


def project(P: ConvexPolytope, s: Sequence[int]) -> ConvexPolytope:
    """The image of P under the linear map x -> s.x, as a 1-dimensional polytope."""
    _check_dim(len(s), P.dim)
    return ConvexPolytope(((sum(a * b for a, b in zip(s, g)),) for g in P.generators), 1)


def punctured_containment(small: ConvexPolytope, big: ConvexPolytope) -> bool:
    """small lies in big with the origin removed."""
    _check_dim(small.dim, big.dim)
    if small.is_empty():
        return True
    return contains(small, big) and not member((0,) * small.dim, small)


def denominator_polytope(h: RationalExpression) -> ConvexPolytope:
    """Newton polytope of the expanded denominator, as a Minkowski sum of the factors."""
    dim = h.table.arity
    return minkowski_all((newton_polytope(f) for f in h.factors()), dim)


def is_n_small(h: Union[RationalExpression, LaurentPolynomial]) -> bool:
    h = RationalExpression.coerce(h)
    return contains(newton_polytope(h.num), denominator_polytope(h))


def _exps(w) -> tuple[int, ...]:
    if isinstance(w, LaurentPolynomial):
        (exps, _), = w.terms()
        return exps
    return tuple(w)


def is_positive(weights: Sequence) -> tuple[bool, Optional[tuple[int, ...]]]:
    """(True, s) with s.w > 0 for every weight when the weight hull misses the origin, else (False, None)."""
    pts = [_exps(w) for w in weights]
    if not pts:
        raise ValueError("is_positive needs at least one weight")
    s = positive_direction(pts)
    if s is None:
        return False, None
    scale = math.lcm(*(x.denominator for x in s))
    return True, tuple(int(x * scale) for x in s)


class _Infinite:
    __slots__ = ()

    def __repr__(self):
        return "Infinite"

    def __str__(self):
        return "infinite"

    def __reduce__(self):
        return (_infinite, ())


def _infinite():
    return Infinite


Infinite = _Infinite()


def _leading(p: LaurentPolynomial) -> tuple[int, LaurentPolynomial]:
    top = max(e[0] for e in p.support())
    return top, LaurentPolynomial.from_terms(Y_TABLE, {(): p.coefficient((top,))})


def limit_at_infinity(h: Union[RationalExpression, LaurentPolynomial]):
    """Limit as xi -> infinity of a rational function in the single variable xi.

    Returns 0, the ratio of the leading y-coefficients, or Infinite.  Finite
    values live over the variable-free table Y_TABLE.
    """
    h = RationalExpression.coerce(h)
    if h.table.arity != 1:
        raise ValueError("limit_at_infinity needs a one-variable expression")
    den = h.expanded_denominator()
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not h.num:
        return Y_TABLE.zero()
    dn, lc_num = _leading(h.num)
    dd, lc_den = _leading(den)
    if dn < dd:
        return Y_TABLE.zero()
    if dn > dd:
        return Infinite
    try:
        return exact_div(lc_num, lc_den)
    except NotDivisible:
        return RationalExpression(lc_num, [lc_den])


def toric_limit(h, s: Sequence[int]):
    """limit_at_infinity after the alpha = xi^s substitution."""
    h = RationalExpression.coerce(h)
    return limit_at_infinity(h.substitute([XI.monomial((si,)) for si in s], XI))
