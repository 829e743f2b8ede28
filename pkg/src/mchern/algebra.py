"""Exact Laurent polynomials over Z[y] and rational expressions with factored denominators.

Monomials are stored packed into a single Python int: every variable of the
table occupies a signed base-2**20 digit and the y-degree sits in the lowest
digit.  Packing is a group homomorphism Z^r x Z -> Z, so multiplying monomials
is integer addition and comparing packed keys is a lexicographic monomial order
(last variable most significant, y least significant).
"""
from __future__ import annotations

import ast
import heapq
import itertools
import math
import re
from collections import Counter
from typing import Iterable, Mapping, Sequence, Union

_SHIFT = 20
_BASE = 1 << _SHIFT
_HALF = _BASE >> 1
_YMASK = _BASE - 1

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = {"y", "q"}


class TableMismatch(ValueError):
    """Arithmetic between objects built on different variable tables."""


class NotDivisible(ArithmeticError):
    """Raised by exact_div when the divisor does not divide the dividend."""


class NonCancellingDenominator(ArithmeticError):
    """A denominator that was required to cancel did not."""


# -- packing ---------------------------------------------------------------

def _pack(exps: Sequence[int]) -> int:
    k = 0
    for e in reversed(exps):
        if not -_HALF < e < _HALF:
            raise OverflowError(f"exponent {e} out of range")
        k = k * _BASE + e
    return k


def _unpack(akey: int, r: int) -> tuple[int, ...]:
    out = []
    for _ in range(r):
        d = akey & _YMASK
        if d >= _HALF:
            d -= _BASE
        out.append(d)
        akey = (akey - d) >> _SHIFT
    return tuple(out)


def _unpack_full(key: int, r: int) -> tuple[int, ...]:
    """Balanced decode of all r+1 digits; entry 0 is the y-degree."""
    return _unpack(key, r + 1)


# -- variable tables -------------------------------------------------------

class VariableTable:
    """Ordered variable names plus contiguous symmetrization blocks.

    Two tables are interchangeable iff names and blocks agree.
    """

    __slots__ = ("names", "blocks", "_index", "_hash")

    def __init__(self, names: Iterable[str], blocks: Iterable[Sequence[int]] = ()):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not _NAME_RE.match(nm) or nm in _RESERVED:
                raise ValueError(f"invalid variable name {nm!r}")
        blocks = tuple(tuple(b) for b in blocks)
        seen: set[int] = set()
        for b in blocks:
            if not b or list(b) != list(range(b[0], b[0] + len(b))):
                raise ValueError(f"block {b} is not a contiguous index range")
            if seen.intersection(b) or b[0] < 0 or b[-1] >= len(names):
                raise ValueError(f"block {b} overlaps or is out of range")
            seen.update(b)
        self.names = names
        self.blocks = blocks
        self._index = {nm: i for i, nm in enumerate(names)}
        self._hash = hash((names, blocks))

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, VariableTable) and self.names == other.names and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"VariableTable({list(self.names)!r}, blocks={list(map(list, self.blocks))!r})"

    def __reduce__(self):
        return (VariableTable, (self.names, self.blocks))

    # constructors
    def zero(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {})

    def one(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {0: 1})

    def const(self, c: Union[int, Sequence[int]]) -> "LaurentPolynomial":
        return LaurentPolynomial.constant(self, c)

    @property
    def y(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {1: 1})

    def gen(self, name: str) -> "LaurentPolynomial":
        return LaurentPolynomial(self, {1 << (_SHIFT * (self._index[name] + 1)): 1})

    def gens(self) -> list["LaurentPolynomial"]:
        return [self.gen(nm) for nm in self.names]

    def monomial(self, exps: Sequence[int], coeff: Union[int, Sequence[int]] = 1) -> "LaurentPolynomial":
        return LaurentPolynomial.monomial(self, exps, coeff)


XI = VariableTable(["xi"])


# -- y-polynomial helpers ----------------------------------------------------

def ypoly_str(coeffs: Sequence[int], var: str = "y") -> str:
    parts = []
    for deg, c in enumerate(coeffs):
        if c == 0:
            continue
        if deg == 0:
            body = str(c)
        else:
            mono = var if deg == 1 else f"{var}^{deg}"
            body = mono if c == 1 else "-" + mono if c == -1 else f"{c}*{mono}"
        if parts and not body.startswith("-"):
            body = "+" + body
        parts.append(body)
    return "".join(parts) if parts else "0"


_YTERM_RE = re.compile(r"([+-]?)(?:(\d+)(?:\*([yq])(?:\^(\d+))?)?|([yq])(?:\^(\d+))?)")


def _parse_ypoly(text: str, var: str = "y") -> list[int]:
    pos, out = 0, {}
    if text == "0":
        return []
    while pos < len(text):
        m = _YTERM_RE.match(text, pos)
        if not m or m.end() == pos or (pos > 0 and not m.group(1)):
            raise ValueError(f"cannot parse coefficient {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(2) is not None:
            c = int(m.group(2))
            v, d = m.group(3), m.group(4)
            deg = 0 if v is None else int(d or 1)
        else:
            c, v, deg = 1, m.group(5), int(m.group(6) or 1)
        if v is not None and v != var:
            raise ValueError(f"unexpected coefficient variable {v!r}")
        out[deg] = out.get(deg, 0) + sign * c
        pos = m.end()
    top = max(out) if out else -1
    return [out.get(i, 0) for i in range(top + 1)]


def _to_q(coeffs: Sequence[int]) -> list[int]:
    # q = -y
    return [c if i % 2 == 0 else -c for i, c in enumerate(coeffs)]


# -- Laurent polynomials -----------------------------------------------------

class LaurentPolynomial:
    """Element of Z[y][x_1^{+-1}, ..., x_r^{+-1}] over a fixed VariableTable.

    Immutable.  Zero is the empty term map; equality is structural, which is
    mathematical equality because the representation is canonical.
    """

    __slots__ = ("table", "_d", "_hash")

    def __init__(self, table: VariableTable, data: Mapping[int, int]):
        self.table = table
        self._d = data
        self._hash = None

    def __reduce__(self):
        return (LaurentPolynomial, (self.table, dict(self._d)))

    # construction
    @classmethod
    def constant(cls, table: VariableTable, c: Union[int, Sequence[int]]) -> "LaurentPolynomial":
        return cls.monomial(table, (0,) * table.arity, c)

    @classmethod
    def monomial(cls, table, exps, coeff: Union[int, Sequence[int]] = 1) -> "LaurentPolynomial":
        if len(exps) != table.arity:
            raise TableMismatch(f"exponent vector of length {len(exps)} for table of arity {table.arity}")
        base = _pack(exps) << _SHIFT
        if isinstance(coeff, int):
            coeff = [coeff]
        return cls(table, {base + d: c for d, c in enumerate(coeff) if c})

    @classmethod
    def from_terms(cls, table, terms: Mapping[Sequence[int], Union[int, Sequence[int]]]) -> "LaurentPolynomial":
        acc: dict[int, int] = {}
        for exps, coeff in terms.items():
            for k, c in cls.monomial(table, tuple(exps), coeff)._d.items():
                v = acc.get(k, 0) + c
                if v:
                    acc[k] = v
                else:
                    acc.pop(k, None)
        return cls(table, acc)

    # basic queries
    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def is_monomial(self) -> bool:
        """One alpha-monomial (the y-coefficient may have several terms)."""
        return len({k >> _SHIFT for k in self._d}) == 1

    def is_unit(self) -> bool:
        return len(self._d) == 1 and next(iter(self._d)) & _YMASK == 0 and next(iter(self._d.values())) in (1, -1)

    def is_constant(self) -> bool:
        return all(k >> _SHIFT == 0 for k in self._d)

    def terms(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """(exponents, y-coefficients ascending) in canonical order."""
        r = self.table.arity
        groups: dict[int, dict[int, int]] = {}
        for k, c in self._d.items():
            groups.setdefault(k >> _SHIFT, {})[k & _YMASK] = c
        out = []
        for akey, ys in groups.items():
            top = max(ys)
            out.append((_unpack(akey, r), tuple(ys.get(i, 0) for i in range(top + 1))))
        out.sort(key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
        return out

    def support(self) -> set[tuple[int, ...]]:
        r = self.table.arity
        return {_unpack(a, r) for a in {k >> _SHIFT for k in self._d}}

    def coefficient(self, exps: Sequence[int]) -> tuple[int, ...]:
        akey = _pack(exps)
        ys = {k & _YMASK: c for k, c in self._d.items() if k >> _SHIFT == akey}
        if not ys:
            return ()
        return tuple(ys.get(i, 0) for i in range(max(ys) + 1))

    def y_degree(self) -> int:
        return max((k & _YMASK for k in self._d), default=-1)

    def low_exponents(self) -> tuple[int, ...]:
        """Componentwise minimum of exponent vectors, y-degree first."""
        r = self.table.arity
        vecs = [_unpack_full(k, r) for k in self._d]
        return tuple(min(col) for col in zip(*vecs))

    # arithmetic
    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.table != self.table:
                raise TableMismatch(f"{self.table!r} vs {other.table!r}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._d) > len(self._d):
            a, b = other._d, self._d
        else:
            a, b = self._d, other._d
        out = dict(a)
        for k, c in b.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return LaurentPolynomial(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.table, {k: -c for k, c in self._d.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RationalExpression):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._d, other._d
        if not a or not b:
            return LaurentPolynomial(self.table, {})
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPolynomial(self.table, {k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if not (len(self._d) == 1 and next(iter(self._d.values())) in (1, -1) and next(iter(self._d)) & _YMASK == 0):
                raise NotDivisible("negative power of a non-unit")
            (k, c), = self._d.items()
            return LaurentPolynomial(self.table, {-k * (-e): c ** (-e)})
        result = self.table.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            if any(c % other for c in self._d.values()):
                raise NotDivisible(f"coefficients not divisible by {other}")
            return LaurentPolynomial(self.table, {k: c // other for k, c in self._d.items()})
        if isinstance(other, LaurentPolynomial):
            return exact_div(self, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.table, other)
        if isinstance(other, RationalExpression):
            return other == self
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.table == other.table and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._d.items())))
        return self._hash

    def shift(self, akey: int) -> "LaurentPolynomial":
        """Multiply by the alpha-monomial with packed exponent key `akey`."""
        off = akey << _SHIFT
        return LaurentPolynomial(self.table, {k + off: c for k, c in self._d.items()})

    # substitutions
    def substitute(self, images: Sequence["LaurentPolynomial"], target: VariableTable) -> "LaurentPolynomial":
        """Ring map sending variable i to the monomial images[i] (a unit in `target`)."""
        if len(images) != self.table.arity:
            raise TableMismatch("one image per variable required")
        img_keys, img_signs = [], []
        for im in images:
            if im.table != target or not im.is_unit():
                raise ValueError("substitution images must be signed monomials in the target table")
            (k, c), = im._d.items()
            img_keys.append(k)
            img_signs.append(c)
        r = self.table.arity
        out: dict[int, int] = {}
        cache: dict[int, tuple[int, int]] = {}
        for k, c in self._d.items():
            akey = k >> _SHIFT
            hit = cache.get(akey)
            if hit is None:
                exps = _unpack(akey, r)
                nk, sg = 0, 1
                for e, ik, s in zip(exps, img_keys, img_signs):
                    if e:
                        nk += e * ik
                        if s < 0 and e & 1:
                            sg = -sg
                hit = cache[akey] = (nk, sg)
            nk = hit[0] + (k & _YMASK)
            v = out.get(nk, 0) + hit[1] * c
            if v:
                out[nk] = v
            else:
                out.pop(nk, None)
        return LaurentPolynomial(target, out)

    def permute(self, perm: Sequence[int]) -> "LaurentPolynomial":
        """Replace variable i by variable perm[i]."""
        gens = self.table.gens()
        return self.substitute([gens[p] for p in perm], self.table)

    def at_y(self, value: int) -> "LaurentPolynomial":
        """Specialize y to an integer."""
        out: dict[int, int] = {}
        for k, c in self._d.items():
            nk = k & ~_YMASK
            out[nk] = out.get(nk, 0) + c * value ** (k & _YMASK)
        return LaurentPolynomial(self.table, {k: c for k, c in out.items() if c})

    # printing / parsing
    def to_str(self, coeff_var: str = "y") -> str:
        if not self._d:
            return "0"
        parts = []
        for exps, ys in self.terms():
            if coeff_var == "q":
                ys = _to_q(ys)
            s = f"({ypoly_str(ys, coeff_var)})"
            s += "".join(f"*{nm}^{e}" for nm, e in zip(self.table.names, exps) if e)
            parts.append(s)
        return " + ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"LaurentPolynomial({self.to_str()!r})"

    _TERM_RE = re.compile(r"\(([^()]*)\)((?:\*[A-Za-z_][A-Za-z0-9_]*\^-?\d+)*)$")
    _FACTOR_RE = re.compile(r"\*([A-Za-z_][A-Za-z0-9_]*)\^(-?\d+)")

    @classmethod
    def parse(cls, text: str, table: VariableTable, coeff_var: str = "y") -> "LaurentPolynomial":
        """Inverse of to_str; accepts only the canonical text form."""
        text = text.strip()
        if text == "0":
            return table.zero()
        terms = {}
        for chunk in text.split(" + "):
            m = cls._TERM_RE.match(chunk)
            if not m:
                raise ValueError(f"malformed term {chunk!r}")
            ys = _parse_ypoly(m.group(1), coeff_var)
            if coeff_var == "q":
                ys = _to_q(ys)
            exps = [0] * table.arity
            for name, e in cls._FACTOR_RE.findall(m.group(2)):
                if name not in table:
                    raise ValueError(f"unknown variable {name!r}")
                exps[table.index(name)] += int(e)
            key = tuple(exps)
            if key in terms:
                raise ValueError(f"repeated monomial in {text!r}")
            terms[key] = ys
        return cls.from_terms(table, terms)


# -- exact division ------------------------------------------------------------

def exact_div(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    """Return r with q*r == p, raising NotDivisible when no such r exists."""
    q = p._coerce(q)
    if not q._d:
        raise ZeroDivisionError("division by the zero polynomial")
    table = p.table
    if not p._d:
        return table.zero()
    qitems = list(q._d.items())
    if len(qitems) == 1:
        (qk, qc), = qitems
        if qk & _YMASK:
            ydeg = qk & _YMASK
            if any((k & _YMASK) < ydeg for k in p._d):
                raise NotDivisible("y-degree would become negative")
        if any(c % qc for c in p._d.values()):
            raise NotDivisible("coefficient not divisible")
        return LaurentPolynomial(table, {k - qk: c // qc for k, c in p._d.items()})
    r = table.arity
    # Lex-leading division emits the quotient terms in decreasing key order.  If
    # q*s == p then every term of s lies above min(p) - min(q) in that order and
    # inside the box [low(p) - low(q), high(p) - high(q)] with y-degree >= 0.  The
    # cheap tests run on every term, the box test in batches so the loop always
    # terminates.
    floor = min(p._d) - min(q._d)
    box = None
    pending = []
    batch = 512 + 4 * len(p._d)
    qlt = max(q._d)
    qlc = q._d[qlt]
    rest = [(k - qlt, c) for k, c in qitems if k != qlt]
    rem = dict(p._d)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, int] = {}
    while rem:
        while True:
            k = -heapq.heappop(heap)
            if k in rem:
                break
        c = rem.pop(k)
        if c % qlc:
            raise NotDivisible("leading coefficient not divisible")
        m = k - qlt
        if m < floor:
            raise NotDivisible("quotient would leave the admissible exponent range")
        if m & _YMASK >= _HALF:
            raise NotDivisible("quotient needs a negative power of y")
        pending.append(m)
        if len(pending) >= batch:
            if box is None:
                box = [a - b for a, b in zip(p.low_exponents(), q.low_exponents())]
            for mk in pending:
                if any(e < b for e, b in zip(_unpack_full(mk, r), box)):
                    raise NotDivisible("quotient would leave the admissible exponent range")
            pending.clear()
        cq = c // qlc
        quot[m] = cq
        for dk, dc in rest:
            kk = k + dk
            v = rem.get(kk, 0) - cq * dc
            if v:
                if kk not in rem:
                    heapq.heappush(heap, -kk)
                rem[kk] = v
            else:
                rem.pop(kk, None)
    return LaurentPolynomial(table, quot)


def divides(q: LaurentPolynomial, p: LaurentPolynomial) -> bool:
    try:
        exact_div(p, q)
    except NotDivisible:
        return False
    return True


# -- rational expressions --------------------------------------------------------

def normalize_factor(f: LaurentPolynomial) -> tuple[LaurentPolynomial, int, int]:
    """Split f = sign * x^m * g with g in a unit-independent normal form.

    Returns (g, sign, packed m).  g has its lex-largest alpha-monomial at the
    origin and a positive lowest-y coefficient there, so f and u*f share g for
    every unit u.
    """
    if not f._d:
        raise ZeroDivisionError("zero denominator factor")
    amax = max(k >> _SHIFT for k in f._d)
    base = amax << _SHIFT
    ylow = min(k & _YMASK for k in f._d if k >> _SHIFT == amax)
    sign = 1 if f._d[base + ylow] > 0 else -1
    g = LaurentPolynomial(f.table, {k - base: sign * c for k, c in f._d.items()})
    return g, sign, amax


def _factor_sort_key(f: LaurentPolynomial):
    return (len(f), f.to_str())


class RationalExpression:
    """numerator / product(denominator factors), denominators kept factored.

    Factors are stored in the normal form of normalize_factor; the unit split
    off each factor is moved into the numerator.  Equality is cross-multiplied
    equality of fractions (rat_equal), not structural identity.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, factors: Iterable[LaurentPolynomial] = ()):
        table = num.table
        den: Counter = Counter()
        for f in factors:
            if isinstance(f, Counter):
                raise TypeError("pass factors as an iterable")
            num._coerce(f)
            g, sign, shift = normalize_factor(f)
            if sign < 0:
                num = -num
            if shift:
                num = num.shift(-shift)
            if len(g._d) == 1 and 0 in g._d and g._d[0] == 1:
                continue
            den[g] += 1
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: LaurentPolynomial, den: Counter) -> "RationalExpression":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def coerce(cls, x) -> "RationalExpression":
        if isinstance(x, RationalExpression):
            return x
        if isinstance(x, LaurentPolynomial):
            return cls._raw(x, Counter())
        raise TypeError(f"cannot coerce {type(x).__name__}")

    def __reduce__(self):
        return (RationalExpression, (self.num, list(self.den.elements())))

    @property
    def table(self) -> VariableTable:
        return self.num.table

    def factors(self) -> list[LaurentPolynomial]:
        """Denominator factors with multiplicity, deterministic order."""
        return [f for f in sorted(self.den, key=_factor_sort_key) for _ in range(self.den[f])]

    def expanded_denominator(self) -> LaurentPolynomial:
        out = self.table.one()
        for f in self.factors():
            out = out * f
        return out

    def is_polynomial(self) -> bool:
        return not self.den

    # arithmetic
    def _check(self, other: "RationalExpression"):
        if other.table != self.table:
            raise TableMismatch(f"{self.table!r} vs {other.table!r}")

    @classmethod
    def sum(cls, items: Iterable) -> "RationalExpression":
        """Sum over a common denominator (the multiset lcm of all denominators)."""
        items = [cls.coerce(x) for x in items]
        if not items:
            raise ValueError("empty sum has no table")
        table = items[0].table
        lcm: Counter = Counter()
        for it in items:
            if it.table != table:
                raise TableMismatch(f"{table!r} vs {it.table!r}")
            lcm |= it.den
        num = table.zero()
        cache: dict[tuple, LaurentPolynomial] = {}
        for it in items:
            if not it.num:
                continue
            missing = lcm - it.den
            key = tuple(sorted(((f.to_str(), m) for f, m in missing.items())))
            mult = cache.get(key)
            if mult is None:
                mult = table.one()
                for f in sorted(missing, key=_factor_sort_key):
                    for _ in range(missing[f]):
                        mult = mult * f
                cache[key] = mult
            num = num + it.num * mult
        return cls._raw(num, lcm)

    def __add__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        if not isinstance(other, (RationalExpression, LaurentPolynomial)):
            return NotImplemented
        other = RationalExpression.coerce(other)
        self._check(other)
        return RationalExpression.sum([self, other])

    __radd__ = __add__

    def __neg__(self):
        return RationalExpression._raw(-self.num, Counter(self.den))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        if not isinstance(other, (RationalExpression, LaurentPolynomial)):
            return NotImplemented
        return self + (-RationalExpression.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        if not isinstance(other, (RationalExpression, LaurentPolynomial)):
            return NotImplemented
        other = RationalExpression.coerce(other)
        self._check(other)
        return RationalExpression._raw(self.num * other.num, self.den + other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalExpression.coerce(other)
        if not isinstance(other, RationalExpression):
            return NotImplemented
        self._check(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        flipped = RationalExpression(other.expanded_denominator(), [other.num])
        return self * flipped

    def __rtruediv__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        return RationalExpression.coerce(other) / self

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.table.const(other)
        if isinstance(other, LaurentPolynomial):
            other = RationalExpression.coerce(other)
        if not isinstance(other, RationalExpression):
            return NotImplemented
        return rat_equal(self, other)

    __hash__ = None

    # simplification
    def cancel(self) -> "RationalExpression":
        """Greedily divide the numerator by each denominator factor."""
        num = self.num
        den = Counter(self.den)
        if not num:
            return RationalExpression._raw(num, Counter())
        for f in sorted(self.den, key=_factor_sort_key):
            for _ in range(self.den[f]):
                try:
                    num = exact_div(num, f)
                except NotDivisible:
                    break
                den[f] -= 1
        den = +den
        return RationalExpression._raw(num, den)

    def to_polynomial(self) -> LaurentPolynomial:
        red = self if not self.den else self.cancel()
        if red.den:
            raise NonCancellingDenominator(
                "denominator factors survive: " + ", ".join(f.to_str() for f in red.factors()))
        return red.num

    def demote(self):
        """The cancelled expression, as a LaurentPolynomial when possible."""
        red = self.cancel()
        return red.num if not red.den else red

    def substitute(self, images, target: VariableTable) -> "RationalExpression":
        num = self.num.substitute(images, target)
        facs = []
        for f in self.factors():
            g = f.substitute(images, target)
            if not g:
                raise NonCancellingDenominator(f"denominator factor {f} vanishes under substitution")
            facs.append(g)
        return RationalExpression(num, facs)

    def permute(self, perm: Sequence[int]) -> "RationalExpression":
        gens = self.table.gens()
        return self.substitute([gens[p] for p in perm], self.table)

    def to_str(self, coeff_var: str = "y") -> str:
        if not self.den:
            return self.num.to_str(coeff_var)
        dens = " * ".join(f"({f.to_str(coeff_var)})" for f in self.factors())
        return f"({self.num.to_str(coeff_var)}) / ({dens})"

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"RationalExpression({self.to_str()!r})"


def rat_equal(a, b) -> bool:
    """a.num * prod(b.den) == b.num * prod(a.den), common factors skipped."""
    a = RationalExpression.coerce(a)
    b = RationalExpression.coerce(b)
    if a.table != b.table:
        raise TableMismatch(f"{a.table!r} vs {b.table!r}")
    common = a.den & b.den
    lhs = a.num
    for f, m in sorted((b.den - common).items(), key=lambda t: _factor_sort_key(t[0])):
        for _ in range(m):
            lhs = lhs * f
    rhs = b.num
    for f, m in sorted((a.den - common).items(), key=lambda t: _factor_sort_key(t[0])):
        for _ in range(m):
            rhs = rhs * f
    return lhs == rhs


# -- named operations ----------------------------------------------------------------

def arith(a, b, op: str):
    """Ring operation by name: 'add', 'mul' or 'neg' (b ignored for neg)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def toric_substitute(p, s: Sequence[int]):
    """The alpha = xi^s substitution; y is untouched."""
    table = p.table
    if len(s) != table.arity:
        raise TableMismatch(f"direction of length {len(s)} for arity {table.arity}")
    images = [XI.monomial((si,)) for si in s]
    return p.substitute(images, XI)


def block_permutations(blocks: Sequence[Sequence[int]], arity: int):
    """Yield every variable permutation in the product of the block symmetric groups."""
    blocks = [list(b) for b in blocks]
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = list(range(arity))
        for b, img in zip(blocks, choice):
            for src, dst in zip(b, img):
                perm[src] = dst
        yield perm


def symmetrize(u, blocks: Sequence[Sequence[int]] | None = None, divisor: int = 1):
    """Orbit sum of u over the product of symmetric groups on `blocks`, divided by `divisor`.

    Returns a LaurentPolynomial when every denominator cancels, otherwise a
    RationalExpression.  Raises NotDivisible if `divisor` does not divide the sum.
    """
    u = RationalExpression.coerce(u)
    table = u.table
    if blocks is None:
        blocks = table.blocks
    terms = [u.permute(perm) for perm in block_permutations(blocks, table.arity)]
    total = RationalExpression.sum(terms).cancel()
    if divisor != 1:
        total = RationalExpression._raw(total.num / divisor, total.den)
    return total.num if not total.den else total


def lambda_class(table: VariableTable, weights: Iterable, sign: str = "y", dual: bool = True) -> LaurentPolynomial:
    """prod over weights w of (1 + y w^e) (sign='y') or (1 - w^e) (sign='minus_one'), e = -1 if dual."""
    out = table.one()
    for w in weights:
        if isinstance(w, LaurentPolynomial):
            mono = w
        else:
            mono = table.monomial(tuple(w))
        if dual:
            mono = mono ** -1
        if sign == "y":
            out = out * (1 + table.y * mono)
        elif sign == "minus_one":
            out = out * (1 - mono)
        else:
            raise ValueError(f"unknown sign {sign!r}")
    return out


# -- expression parsing ------------------------------------------------------------------

_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)


def parse_expr(text: str, table: VariableTable):
    """Evaluate an arithmetic expression such as "(1+y)/a*(1-1/b)".

    Names are table variables, y, and q (= -y).  Returns a LaurentPolynomial
    when the value is one, otherwise a cancelled RationalExpression.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return RationalExpression.coerce(table.const(node.value))
        if isinstance(node, ast.Name):
            if node.id == "y":
                return RationalExpression.coerce(table.y)
            if node.id == "q":
                return RationalExpression.coerce(-table.y)
            if node.id in table:
                return RationalExpression.coerce(table.gen(node.id))
            raise ValueError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            if isinstance(node.op, ast.Pow):
                e = node.right
                neg = isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub)
                if neg:
                    e = e.operand
                if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                    raise ValueError("exponents must be integer literals")
                base = ev(node.left)
                val = RationalExpression.coerce(table.one())
                for _ in range(e.value):
                    val = val * base
                return (RationalExpression.coerce(table.one()) / val) if neg else val
            lhs, rhs = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return lhs + rhs
            if isinstance(node.op, ast.Sub):
                return lhs - rhs
            if isinstance(node.op, ast.Mult):
                return lhs * rhs
            return lhs / rhs
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree).demote()
