"""Schubert cells of partial flag varieties: weight functions, fixed-point restrictions, axiom checks."""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .algebra import (
    LaurentPolynomial,
    NotDivisible,
    RationalExpression,
    VariableTable,
    exact_div,
    lambda_class,
    symmetrize,
)
from .kernel import psi
from .parallel import pmap
from .polytope import (
    ConvexPolytope,
    containment_failure,
    is_positive,
    member,
    newton_polytope,
)


class FlagShape:
    """Dimension vector mu = (mu_1, ..., mu_N) of a partial flag variety in C^n."""

    __slots__ = ("mu", "cumulative", "_table", "_beta")

    def __init__(self, mu: Iterable[int]):
        mu = tuple(int(m) for m in mu)
        if not mu or any(m < 1 for m in mu):
            raise ValueError(f"mu must be a nonempty list of positive integers, got {mu}")
        self.mu = mu
        self.cumulative = tuple(itertools.accumulate(mu))
        self._table = None
        self._beta = None

    @classmethod
    def parse(cls, text: str) -> "FlagShape":
        try:
            return cls(int(t) for t in text.split(","))
        except ValueError:
            raise ValueError(f"cannot parse shape {text!r}") from None

    @property
    def n(self) -> int:
        return self.cumulative[-1]

    @property
    def N(self) -> int:
        return len(self.mu)

    def __eq__(self, other):
        return isinstance(other, FlagShape) and self.mu == other.mu

    def __hash__(self):
        return hash(self.mu)

    def __repr__(self):
        return f"FlagShape({list(self.mu)})"

    def __str__(self):
        return ",".join(map(str, self.mu))

    def __reduce__(self):
        return (FlagShape, (self.mu,))

    def var_name(self, j: int, a: int) -> str:
        """Name of the a-th Chern root at level j (1-based; level N holds the b variables)."""
        if j == self.N:
            return f"b{a}"
        return f"a{a}" if self.N == 2 else f"a{j}_{a}"

    @property
    def table(self) -> VariableTable:
        """All alpha levels below N (one symmetrization block each), then b1..bn."""
        if self._table is None:
            names, blocks = [], []
            for j in range(1, self.N):
                start = len(names)
                names += [self.var_name(j, a) for a in range(1, self.cumulative[j - 1] + 1)]
                blocks.append(tuple(range(start, len(names))))
            names += [self.var_name(self.N, a) for a in range(1, self.n + 1)]
            self._table = VariableTable(names, blocks)
        return self._table

    @property
    def beta_table(self) -> VariableTable:
        if self._beta is None:
            self._beta = VariableTable([f"b{a}" for a in range(1, self.n + 1)])
        return self._beta

    def var_index(self, j: int, a: int) -> int:
        return self.table.index(self.var_name(j, a))


class CompositionIndex:
    """Ordered set partition (I_1, ..., I_N) of {1..n}, written like "1,3/2,4"."""

    __slots__ = ("blocks",)

    def __init__(self, blocks: Iterable[Iterable[int]]):
        blocks = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
        flat = sorted(x for b in blocks for x in b)
        if not blocks or flat != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks {blocks} do not partition {{1..n}}")
        if any(not b for b in blocks):
            raise ValueError("empty block")
        self.blocks = blocks

    @classmethod
    def parse(cls, text: str, shape: Optional[FlagShape] = None) -> "CompositionIndex":
        try:
            blocks = [[int(x) for x in part.split(",") if x.strip()] for part in text.split("/")]
        except ValueError:
            raise ValueError(f"cannot parse index {text!r}") from None
        idx = cls(blocks)
        if shape is not None and idx.shape != shape:
            raise ValueError(f"index {text} does not have shape {shape}")
        return idx

    @property
    def shape(self) -> FlagShape:
        return FlagShape(len(b) for b in self.blocks)

    def cumulative(self, j: int) -> tuple[int, ...]:
        """Sorted elements of I_1 u ... u I_j."""
        return tuple(sorted(x for b in self.blocks[:j] for x in b))

    def block_of(self, x: int) -> int:
        for j, b in enumerate(self.blocks):
            if x in b:
                return j
        raise ValueError(x)

    def swap(self, a: int, b: int) -> "CompositionIndex":
        def t(x):
            return b if x == a else a if x == b else x
        return CompositionIndex([[t(x) for x in blk] for blk in self.blocks])

    def __eq__(self, other):
        return isinstance(other, CompositionIndex) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __lt__(self, other):
        return self.blocks < other.blocks

    def __str__(self):
        return "/".join(",".join(map(str, b)) for b in self.blocks)

    def __repr__(self):
        return f"CompositionIndex({str(self)!r})"

    def __reduce__(self):
        return (CompositionIndex, (self.blocks,))


def enumerate_indices(shape: FlagShape) -> list[CompositionIndex]:
    """All ordered partitions of type mu, in lexicographic order of the block word."""
    out = []

    def rec(word, counts):
        if len(word) == shape.n:
            out.append(CompositionIndex([[i + 1 for i, w in enumerate(word) if w == j] for j in range(shape.N)]))
            return
        for j in range(shape.N):
            if counts[j]:
                counts[j] -= 1
                word.append(j)
                rec(word, counts)
                word.pop()
                counts[j] += 1

    rec([], list(shape.mu))
    return out


def open_cell(shape: FlagShape) -> CompositionIndex:
    """The index whose blocks are consecutive increasing runs; its cell is open."""
    return CompositionIndex([range(c - m + 1, c + 1) for m, c in zip(shape.mu, shape.cumulative)])


def codim(I: CompositionIndex) -> int:
    """#{(a, b) : a > b, a in I_j, b in I_k, j < k}."""
    where = {x: j for j, b in enumerate(I.blocks) for x in b}
    n = len(where)
    return sum(1 for a in range(1, n + 1) for b in range(1, a) if where[a] < where[b])


# -- weight functions --------------------------------------------------------------

def _u_parts(I: CompositionIndex, shape: FlagShape, image, table: VariableTable):
    """Numerator and denominator factors of U_I with alpha^(j)_a replaced by image(j, a).

    Returns None when a numerator factor vanishes.
    """
    factors = []
    dens = []
    for j in range(1, shape.N):
        lo, hi = I.cumulative(j), I.cumulative(j + 1)
        for a in range(1, len(lo) + 1):
            xa = image(j, a)
            for b in range(1, len(hi) + 1):
                f = psi(lo[a - 1], hi[b - 1], xa * image(j + 1, b) ** -1)
                if not f:
                    return None
                factors.append(f)
        for a in range(1, len(lo) + 1):
            for b in range(a + 1, len(lo) + 1):
                ratio = image(j, b) * image(j, a) ** -1
                factors.append(1 + table.y * ratio)
                dens.append(1 - ratio)
    num = table.one()
    for f in factors:
        num = num * f
    return num, dens


def _e_factors(shape: FlagShape, image) -> list[LaurentPolynomial]:
    out = []
    for j in range(1, shape.N):
        m = shape.cumulative[j - 1]
        for a in range(1, m + 1):
            for b in range(1, m + 1):
                xb = image(j, b)
                out.append(1 + xb.table.y * xb * image(j, a) ** -1)
    return out


@dataclass
class WeightFunction:
    """U_I together with its symmetrization W_I and the modified W_I / e_mu (computed on demand)."""

    index: CompositionIndex
    U: RationalExpression
    _W: object = field(default=None, repr=False)

    @property
    def shape(self) -> FlagShape:
        return self.index.shape

    @property
    def W(self):
        if self._W is None:
            self._W = symmetrize(self.U, self.U.table.blocks)
        return self._W

    @property
    def W_tilde(self) -> RationalExpression:
        shape = self.shape
        gens = shape.table.gens()
        e = _e_factors(shape, lambda j, a: gens[shape.var_index(j, a)])
        return RationalExpression.coerce(self.W) * RationalExpression(shape.table.one(), e)


def weight_function_flag(I: CompositionIndex) -> WeightFunction:
    shape = I.shape
    gens = shape.table.gens()
    parts = _u_parts(I, shape, lambda j, a: gens[shape.var_index(j, a)], shape.table)
    if parts is None:
        return WeightFunction(I, RationalExpression.coerce(shape.table.zero()))
    num, dens = parts
    return WeightFunction(I, RationalExpression(num, dens))


def _restriction_images(shape: FlagShape, J: CompositionIndex) -> list[LaurentPolynomial]:
    bgens = shape.beta_table.gens()
    images = [None] * shape.table.arity
    for j in range(1, shape.N + 1):
        Jj = J.cumulative(j)
        for a in range(1, len(Jj) + 1):
            images[shape.var_index(j, a)] = bgens[Jj[a - 1] - 1]
    return images


def is_block_symmetric(expr, blocks: Sequence[Sequence[int]]) -> bool:
    expr = RationalExpression.coerce(expr)
    arity = expr.table.arity
    for blk in blocks:
        for i in range(len(blk) - 1):
            perm = list(range(arity))
            perm[blk[i]], perm[blk[i + 1]] = perm[blk[i + 1]], perm[blk[i]]
            if expr.permute(perm) != expr:
                return False
    return True


def restrict(expr, J: CompositionIndex, check_symmetry: bool = True) -> LaurentPolynomial:
    """The substitution alpha^(j)_a -> b_{j^(j)_a}, followed by clearing denominators exactly."""
    shape = J.shape
    expr = RationalExpression.coerce(expr)
    if expr.table != shape.table:
        raise ValueError(f"expression table {expr.table!r} does not match shape {shape}")
    if check_symmetry and not is_block_symmetric(expr, shape.table.blocks):
        raise ValueError("expression is not symmetric in each alpha level")
    return expr.substitute(_restriction_images(shape, J), shape.beta_table).to_polynomial()


@functools.lru_cache(maxsize=4096)
def restriction(I: CompositionIndex, J: CompositionIndex) -> LaurentPolynomial:
    """r_J of the modified weight function of I, summed orbit term by orbit term.

    Equal to restrict(weight_function_flag(I).W_tilde, J) but never expands the
    alpha-level expression: each permuted U term is evaluated at the fixed point
    directly, and terms with a vanishing factor are skipped.
    """
    shape = I.shape
    if J.shape != shape:
        raise ValueError(f"{J} and {I} have different shapes")
    bgens = shape.beta_table.gens()
    levels = [J.cumulative(j) for j in range(1, shape.N + 1)]
    terms = []
    for perms in itertools.product(*(itertools.permutations(range(m)) for m in shape.cumulative[:-1])):
        def image(j, a, perms=perms):
            if j == shape.N:
                return bgens[a - 1]
            return bgens[levels[j - 1][perms[j - 1][a - 1]] - 1]
        parts = _u_parts(I, shape, image, shape.beta_table)
        if parts is not None:
            terms.append(RationalExpression(*parts))
    if not terms:
        return shape.beta_table.zero()
    total = RationalExpression.sum(terms)
    e = _e_factors(shape, lambda j, a: bgens[levels[j - 1][a - 1] - 1])
    return (total * RationalExpression(shape.beta_table.one(), e)).to_polynomial()


# -- localization data -----------------------------------------------------------------

@dataclass(frozen=True)
class TangentData:
    """Weights at a fixed point as exponent vectors in b1..bn."""

    cell_tangent: tuple[tuple[int, ...], ...]
    cell_normal: tuple[tuple[int, ...], ...]

    @property
    def ambient_tangent(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.cell_tangent + self.cell_normal))


def fixed_point_weights(J: CompositionIndex) -> TangentData:
    """Weights b_b/b_a for a in J_j, b in J_k, j < k; normal when a > b, tangent when a < b."""
    n = J.shape.n
    tangent, normal = [], []
    for j, k in itertools.combinations(range(len(J.blocks)), 2):
        for a in J.blocks[j]:
            for b in J.blocks[k]:
                w = [0] * n
                w[b - 1] += 1
                w[a - 1] -= 1
                (normal if a > b else tangent).append(tuple(w))
    return TangentData(tuple(tangent), tuple(normal))


@dataclass
class FixedPointClass:
    """A class on Fl_mu given by its restriction to every torus fixed point."""

    shape: FlagShape
    restrictions: dict

    def __getitem__(self, J: CompositionIndex) -> LaurentPolynomial:
        return self.restrictions[J]

    def replace(self, J: CompositionIndex, value: LaurentPolynomial) -> "FixedPointClass":
        new = dict(self.restrictions)
        new[J] = value
        return FixedPointClass(self.shape, new)

    def to_json(self) -> dict:
        return {"mu": list(self.shape.mu),
                "restrictions": {str(J): str(f) for J, f in self.restrictions.items()}}


def _restriction_job(pair):
    return restriction(*pair)


def mc_schubert(I: CompositionIndex, threads: Optional[int] = None) -> FixedPointClass:
    shape = I.shape
    Js = enumerate_indices(shape)
    vals = pmap(_restriction_job, [(I, J) for J in Js], threads)
    return FixedPointClass(shape, dict(zip(Js, vals)))


# -- axioms -------------------------------------------------------------------------------

@dataclass
class AxiomEntry:
    index: CompositionIndex
    positive: bool
    positivity_witness: Optional[tuple[int, ...]]
    principal: Optional[bool]  # axiom (i); None away from the cell's own point
    divisible: bool
    newton: Optional[bool]  # axiom (iii); None at the cell's own point
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.positive and self.principal is not False and self.divisible and self.newton is not False

    def to_json(self) -> dict:
        return {
            "index": str(self.index),
            "positive": self.positive,
            "positivity_witness": list(self.positivity_witness) if self.positivity_witness is not None else None,
            "principal": self.principal,
            "divisible": self.divisible,
            "newton": self.newton,
            "witness": self.witness,
            "passed": self.passed,
        }


@dataclass
class AxiomReport:
    omega: CompositionIndex
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_json(self) -> dict:
        return {"mu": list(self.omega.shape.mu), "omega": str(self.omega), "passed": self.passed,
                "entries": [e.to_json() for e in self.entries]}


@functools.lru_cache(maxsize=None)
def _local_data(J: CompositionIndex):
    td = fixed_point_weights(J)
    table = J.shape.beta_table
    lam_t = lambda_class(table, td.cell_tangent, "y", dual=True)
    lam_n = lambda_class(table, td.cell_normal, "minus_one", dual=True)
    if td.cell_normal:
        pos, wit = is_positive(td.cell_normal)
    else:
        pos, wit = True, None
    big = newton_polytope(lam_n)
    big.vertices  # computed once, reused by every membership test at this point
    return td, lam_t, lam_n, big, pos, wit


def check_point(f: LaurentPolynomial, Theta: CompositionIndex, Omega: CompositionIndex) -> AxiomEntry:
    """Axioms (i)-(iii) and positivity for one restriction f at the fixed point Theta."""
    td, lam_t, lam_n, big, pos, wit = _local_data(Theta)
    principal = newton = None
    witness = None
    if Theta == Omega:
        principal = f == lam_t * lam_n
        if not principal:
            witness = "restriction differs from lambda_y(T*) lambda_-1(normal*)"
    try:
        quot = exact_div(f, lam_t)
        divisible = True
    except NotDivisible:
        quot, divisible = None, False
        witness = f"not divisible by {lam_t}"
    if Theta != Omega:
        if quot is None:
            newton = False
        else:
            small = newton_polytope(quot)
            bad = containment_failure(small, big)
            if bad is not None:
                newton, witness = False, f"vertex {list(bad)} outside the normal polytope"
            elif not small.is_empty() and member((0,) * small.dim, small):
                newton, witness = False, "origin lies in the Newton polytope"
            else:
                newton = True
    return AxiomEntry(Theta, pos, wit, principal, divisible, newton, witness)


def _check_job(args):
    return check_point(*args)


def check_axioms(cls: FixedPointClass, Omega: CompositionIndex,
                 points: Optional[Iterable[CompositionIndex]] = None,
                 threads: Optional[int] = None) -> AxiomReport:
    """Run the local axiom checks at every fixed point (or only at `points`)."""
    pts = list(cls.restrictions) if points is None else list(points)
    missing = [J for J in pts if J not in cls.restrictions]
    if missing:
        raise ValueError(f"class has no restriction at {missing[0]}")
    entries = pmap(_check_job, [(cls.restrictions[T], T, Omega) for T in pts], threads)
    return AxiomReport(Omega, entries)


def gkm_pairs(shape: FlagShape):
    """(J, J', a, b): fixed points joined by the transposition of a < b lying in different blocks."""
    out = []
    for J in enumerate_indices(shape):
        for a, b in itertools.combinations(range(1, shape.n + 1), 2):
            if J.block_of(a) != J.block_of(b):
                J2 = J.swap(a, b)
                if J < J2:
                    out.append((J, J2, a, b))
    return out


def gkm_edge_ok(f: LaurentPolynomial, g: LaurentPolynomial, a: int, b: int) -> bool:
    """f - g vanishes on b_a = b_b."""
    table = f.table
    return (f - g).substitute(
        [table.gen(f"b{b}") if i == a - 1 else x for i, x in enumerate(table.gens())], table).is_zero()


def is_gkm(cls: FixedPointClass) -> bool:
    """Restrictions at points joined by a transposition agree modulo (1 - b_a/b_b)."""
    return all(gkm_edge_ok(cls[J], cls[J2], a, b) for J, J2, a, b in gkm_pairs(cls.shape))


def coefficient_pool(classes: Iterable[FixedPointClass]) -> list[tuple[int, ...]]:
    """0 together with every y-coefficient occurring in the given classes."""
    pool = {()}
    for c in classes:
        for f in c.restrictions.values():
            pool.update(ys for _, ys in f.terms())
    return sorted(pool, key=lambda t: (len(t), t))


def uniqueness_search(shape: FlagShape, Omega: CompositionIndex,
                      pool: Optional[Sequence[tuple[int, ...]]] = None,
                      max_candidates: int = 10 ** 6) -> list[FixedPointClass]:
    """Every restriction tuple satisfying the axioms for Omega and the GKM condition.

    Candidates at Theta are supported on the lattice points of
    N(lambda_y(T*) lambda_-1(normal*)) with coefficients from `pool`.
    """
    Js = enumerate_indices(shape)
    if pool is None:
        pool = coefficient_pool(mc_schubert(I) for I in Js)
    table = shape.beta_table
    local = {}
    total = 1
    for T in Js:
        _, lam_t, lam_n, _, _, _ = _local_data(T)
        pts = newton_polytope(lam_t * lam_n).lattice_points()
        total *= len(pool) ** len(pts)
        if total > max_candidates:
            raise ValueError("candidate space too large for exhaustive search")
        ok = []
        for coeffs in itertools.product(pool, repeat=len(pts)):
            f = LaurentPolynomial.from_terms(table, {p: c for p, c in zip(pts, coeffs) if c})
            if check_point(f, T, Omega).passed:
                ok.append(f)
        local[T] = ok
    edges = gkm_pairs(shape)
    found = []
    for combo in itertools.product(*(local[T] for T in Js)):
        cls = FixedPointClass(shape, dict(zip(Js, combo)))
        if all(gkm_edge_ok(cls[J], cls[J2], a, b) for J, J2, a, b in edges):
            found.append(cls)
    return found
