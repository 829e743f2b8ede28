"""Command-line interface: ``mchern <subcommand> ...`` (or ``python -m mchern``).

Exit status is 0 on success, 1 when a verification disagrees, 2 on bad usage.
Output is assembled completely before anything is printed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import parallel
from .algebra import (
    XI,
    LaurentPolynomial,
    NonCancellingDenominator,
    RationalExpression,
    VariableTable,
    exact_div,
    parse_expr,
    toric_substitute,
)
from .flag import (
    CompositionIndex,
    FlagShape,
    check_axioms,
    mc_schubert,
    weight_function_flag,
)
from .golden import run_goldens
from .matrix import OrbitIndex, orbit_sum_identity, weight_function_matrix
from .polytope import Infinite, newton_polytope, punctured_containment
from .rankloci import q_binomial, qpoly_str, segre_class, segre_sieve, tau_rank_motivic


class UsageError(Exception):
    """Invalid parameters; reported with exit status 2."""


class Result:
    def __init__(self, data: dict, text: str, status: int = 0):
        self.data, self.text, self.status = data, text, status


def _csv_ints(text: str, what: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


def _show(x, q: bool = False) -> str:
    return x.to_str("q" if q else "y")


# -- subcommands --------------------------------------------------------------------

def cmd_flag(args) -> Result:
    try:
        shape = FlagShape(_csv_ints(args.mu, "--mu"))
        I = CompositionIndex.parse(args.index, shape)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    base = {"mu": list(shape.mu), "index": str(I)}
    if args.emit == "weightfn":
        wf = weight_function_flag(I)
        data = dict(base, U=_show(wf.U), W=_show(wf.W), W_tilde=_show(wf.W_tilde))
        text = f"U = {data['U']}\nW = {data['W']}\nW_tilde = {data['W_tilde']}"
        return Result(data, text)
    cls = mc_schubert(I)
    if args.emit == "restrictions":
        rs = {str(J): str(f) for J, f in cls.restrictions.items()}
        return Result(dict(base, restrictions=rs), "\n".join(f"{J}: {f}" for J, f in rs.items()))
    report = check_axioms(cls, I)
    data = report.to_json()
    lines = []
    for e in report.entries:
        lines.append(f"{'PASS' if e.passed else 'FAIL'} {e.index}"
                     f" principal={e.principal} divisible={e.divisible} newton={e.newton}"
                     f" positive={e.positive}" + (f" ({e.witness})" if e.witness else ""))
    lines.append("ALL PASS" if report.passed else "FAILED")
    return Result(data, "\n".join(lines), 0 if report.passed else 1)


def cmd_matsch(args) -> Result:
    try:
        idx = OrbitIndex(args.k, args.n, _csv_ints(args.J, "--J"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    w = weight_function_matrix(idx)
    data = {"k": idx.k, "n": idx.n, "J": list(idx.J), "weight_function": str(w)}
    text = str(w)
    status = 0
    if args.sum_check:
        ok, residual = orbit_sum_identity(idx.k, idx.n)
        data["sum_check"] = {"ok": ok, "residual": str(residual)}
        text += "\norbit sum: " + ("OK" if ok else f"residual {residual}")
        status = 0 if ok else 1
    return Result(data, text, status)


def cmd_a2(args) -> Result:
    k, n, r = args.k, args.n, args.r
    if not 0 <= r <= k <= n:
        raise UsageError(f"need 0 <= r <= k <= n, got k={k}, n={n}, r={r}")
    q = args.q_display
    data = {"k": k, "n": n, "r": r, "method": args.method, "coefficients": "q" if q else "y"}
    lines = []
    motivic = sieve = None
    if args.method in ("motivic", "both"):
        tau = tau_rank_motivic(k, n, r)
        motivic = segre_class(tau, k, n)
        data["tau"] = _show(tau, q)
        data["motivic"] = _show(motivic, q)
        lines += [f"tau = {data['tau']}", f"ts (motivic) = {data['motivic']}"]
    if args.method in ("sieve", "both"):
        sieve = segre_sieve(k, n, r)
        data["sieve"] = _show(sieve, q)
        lines.append(f"ts (sieve) = {data['sieve']}")
    status = 0
    if args.method == "both":
        equal = motivic == sieve
        data["equal"] = equal
        lines.append("EQUAL" if equal else "DIFFERENT")
        status = 0 if equal else 1
    return Result(data, "\n".join(lines), status)


def _table_from_vars(text: str) -> VariableTable:
    names = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return VariableTable(names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse(expr: str, table: VariableTable):
    try:
        return parse_expr(expr, table)
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        raise UsageError(f"cannot use expression {expr!r}: {exc}") from None


def _polynomial(expr: str, table: VariableTable) -> LaurentPolynomial:
    val = _parse(expr, table)
    if not isinstance(val, LaurentPolynomial):
        raise UsageError(f"{expr!r} is not a Laurent polynomial")
    return val


def cmd_polytope(args) -> Result:
    if args.expr is not None:
        if args.mu or args.index or args.at:
            raise UsageError("use either --expr or --mu/--index/--at")
        table = _table_from_vars(args.vars)
        P = newton_polytope(_polynomial(args.expr, table))
        data = P.to_json()
        if args.inside is not None:
            big = newton_polytope(_polynomial(args.inside, table))
            data["inside"] = big.to_json()
            data["punctured_containment"] = punctured_containment(P, big)
    else:
        if not (args.mu and args.index and args.at):
            raise UsageError("polytope needs --expr, or all of --mu, --index and --at")
        try:
            shape = FlagShape(_csv_ints(args.mu, "--mu"))
            I = CompositionIndex.parse(args.index, shape)
            J = CompositionIndex.parse(args.at, shape)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        from .flag import _local_data, restriction

        _, lam_t, lam_n, big, _, _ = _local_data(J)
        f = restriction(I, J)
        try:
            quotient = exact_div(f, lam_t)
        except ArithmeticError:
            return Result({"error": "restriction not divisible by lambda_y(T*)"}, "not divisible", 1)
        P = newton_polytope(quotient)
        data = P.to_json()
        data["inside"] = big.to_json()
        data["punctured_containment"] = punctured_containment(P, big)
    text = "\n".join(f"{key}: {json.dumps(val)}" for key, val in data.items())
    return Result(data, text)


def cmd_qbinom(args) -> Result:
    if args.a < 0:
        raise UsageError("--a must be nonnegative")
    coeffs = q_binomial(args.a, args.r)
    s = qpoly_str(coeffs)
    return Result({"a": args.a, "r": args.r, "coefficients": list(coeffs), "text": s}, s)


def cmd_limit(args) -> Result:
    from .polytope import limit_at_infinity

    if args.vars is None:
        if args.s is not None:
            raise UsageError("--s needs --vars")
        h = _parse(args.expr, XI)
    else:
        table = _table_from_vars(args.vars)
        if args.s is None:
            raise UsageError("--vars needs --s")
        s = _csv_ints(args.s, "--s")
        if len(s) != table.arity:
            raise UsageError(f"--s has {len(s)} entries for {table.arity} variables")
        try:
            h = toric_substitute(RationalExpression.coerce(_parse(args.expr, table)), s)
        except NonCancellingDenominator as exc:
            raise UsageError(str(exc)) from None
    try:
        val = limit_at_infinity(h)
    except ZeroDivisionError as exc:
        raise UsageError(str(exc)) from None
    if val is Infinite:
        return Result({"infinite": True, "value": None}, "infinite")
    return Result({"infinite": False, "value": str(val)}, str(val))


def cmd_selftest(args) -> Result:
    results = run_goldens()
    passed = all(ok for _, ok, _ in results)
    width = max(len(name) for name, _, _ in results)
    lines = [f"{'PASS' if ok else 'FAIL'}  {name.ljust(width)}  {err}".rstrip() for name, ok, err in results]
    lines.append(f"{sum(ok for _, ok, _ in results)}/{len(results)} passed")
    data = {"passed": passed, "results": [{"name": n, "passed": ok, "error": e} for n, ok, e in results]}
    return Result(data, "\n".join(lines), 0 if passed else 1)


# -- parser ----------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS,
                        help="output format (default text)")
    common.add_argument("--threads", type=_positive_int, default=argparse.SUPPRESS,
                        help=f"worker processes (default ${parallel.ENV_VAR} or 1)")

    p = argparse.ArgumentParser(prog="mchern", parents=[common],
                                description="Motivic Chern classes of Schubert cells, matrix Schubert cells and rank loci.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    f = sub.add_parser("flag", parents=[common], help="Schubert cells in partial flag varieties")
    f.add_argument("--mu", required=True, help="dimension vector, e.g. 2,2")
    f.add_argument("--index", required=True, help="cell index, e.g. 1,3/2,4")
    f.add_argument("--emit", choices=["weightfn", "restrictions", "axioms"], default="restrictions")
    f.set_defaults(func=cmd_flag)

    m = sub.add_parser("matsch", parents=[common], help="matrix Schubert cells in Hom(C^k, C^n)")
    m.add_argument("--k", type=int, required=True)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--J", default="", help="pivot rows, e.g. 2,3 (empty for J = {})")
    m.add_argument("--emit", choices=["weightfn"], default="weightfn")
    m.add_argument("--sum-check", action="store_true", help="also verify the sum over all orbits")
    m.set_defaults(func=cmd_matsch)

    a = sub.add_parser("a2", parents=[common], help="rank loci: motivic and sieve Segre classes")
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--r", type=int, required=True, help="kernel dimension")
    a.add_argument("--method", choices=["motivic", "sieve", "both"], default="both")
    a.add_argument("--q-display", action="store_true", help="print coefficients in q = -y")
    a.set_defaults(func=cmd_a2)

    t = sub.add_parser("polytope", parents=[common], help="Newton polytope data for plotting")
    t.add_argument("--expr", help="Laurent polynomial, e.g. '(1+y)/(a*b) - 1/a^4*b'")
    t.add_argument("--vars", default="a,b", help="variable names for --expr (default a,b)")
    t.add_argument("--inside", help="second polynomial; reports punctured containment in its polytope")
    t.add_argument("--mu", help="flag shape for a restriction polytope")
    t.add_argument("--index", help="cell index")
    t.add_argument("--at", help="fixed point to restrict to")
    t.set_defaults(func=cmd_polytope)

    qb = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial coefficient")
    qb.add_argument("--a", type=int, required=True)
    qb.add_argument("--r", type=int, required=True)
    qb.set_defaults(func=cmd_qbinom)

    lm = sub.add_parser("limit", parents=[common], help="limit at infinity of a rational function of xi")
    lm.add_argument("--expr", required=True, help="expression in xi, or in --vars when --s is given")
    lm.add_argument("--vars", help="variables of --expr before substituting along --s")
    lm.add_argument("--s", help="direction for the substitution var_i = xi^s_i")
    lm.set_defaults(func=cmd_limit)

    st = sub.add_parser("selftest", parents=[common], help="check every published reference value")
    st.set_defaults(func=cmd_selftest)
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str, str]:
    """Execute a command; returns (status, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already wrote its message to stderr
        return int(exc.code or 0), "", ""
    fmt = getattr(args, "format", "text")
    try:
        parallel.set_workers(getattr(args, "threads", None) or parallel.workers())
    except ValueError as exc:
        return 2, "", f"mchern: error: {exc}\n"
    try:
        res = args.func(args)
    except UsageError as exc:
        return 2, "", f"mchern {args.command}: error: {exc}\n"
    finally:
        parallel.set_workers(None)
    out = json.dumps(res.data, indent=2, sort_keys=True) if fmt == "json" else res.text
    return res.status, out + "\n", ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    status, out, err = run(argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
