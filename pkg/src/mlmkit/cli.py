"""Command-line entry point: ``mlmkit <command> ...``.

Exit status is 0 on success, 1 on malformed input or usage errors, 2 when a
resource budget is exceeded. Setting ``MLMKIT_BUDGET`` raises the default cap
on coefficient multiplications.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import textio
from .approx import CountBackend, approx_coefficient, estimate_matchings, hybrid_coefficient, sum_via_padding
from .core import PiSigmaPi
from .counting import count_perfect_matchings, permanent, permanent_ryser
from .errors import MLMError, ParseError, ResourceError, ShapeError
from .evaluate import EvalBudget, coefficient, eval_circuit, eval_pisigmapi, oracle_expand, sum_coefficients
from .generators import (
    independent_set_polynomial,
    k_path_polynomial,
    matching_polynomial_h,
    matching_polynomial_xy,
    permanent_polynomial,
    twosat_polynomial,
)
from .maxmlm import exact_max_mlm, greedy_max_mlm


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _is_poly_text(text: str) -> bool:
    for line in text.splitlines():
        s = line.strip()
        if not s or s.startswith("#") or s.split()[0] == "vars":
            continue
        return s.startswith("(")
    return True


def _load(path: str):
    text = _read(path)
    return textio.parse_poly(text) if _is_poly_text(text) else textio.parse_circuit(text)


def _load_poly(path: str) -> PiSigmaPi:
    obj = _load(path)
    if not isinstance(obj, PiSigmaPi):
        raise ShapeError(f"{path}: this command needs a product-of-sums polynomial, not a circuit")
    return obj


def _table(obj, budget):
    if isinstance(obj, PiSigmaPi):
        return eval_pisigmapi(obj, budget)
    return eval_circuit(obj, budget)


def _budget() -> EvalBudget:
    raw = os.environ.get("MLMKIT_BUDGET")
    if not raw:
        return EvalBudget()
    try:
        work = int(raw)
    except ValueError:
        raise ShapeError(f"MLMKIT_BUDGET must be an integer, got {raw!r}") from None
    return EvalBudget(max_total_work=max(work, EvalBudget().max_total_work))


def _backend(args) -> CountBackend:
    if args.backend == "exact":
        return CountBackend.exact()
    return CountBackend.monte_carlo(args.samples, args.seed)


def _format_estimate(res) -> str:
    if res.exact:
        v = res.value
        return f"{v.numerator}\n" if v.denominator == 1 else f"{v.numerator}/{v.denominator}\n"
    return f"{float(res.value):.6f}\nstderr {res.stderr:.6f}\n"


def _add_backend(p):
    p.add_argument("--backend", choices=["exact", "mc"], default="exact")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mlmkit", description="Multilinear monomial coefficients and related counts.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="all multilinear coefficients of a polynomial or circuit")
    p.add_argument("file")
    p = sub.add_parser("coeff", help="coefficient of one multilinear monomial")
    p.add_argument("file")
    p.add_argument("--monomial", required=True)
    p = sub.add_parser("sum", help="sum of all multilinear coefficients")
    p.add_argument("file")
    p = sub.add_parser("oracle", help="brute-force reference table")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=10**6)

    p = sub.add_parser("perm", help="permanent of an integer matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--method", choices=["fold", "ryser"], default="fold")
    p = sub.add_parser("matchings", help="number of perfect matchings of a bipartite graph")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("estimate", help="coefficient (or matching count) through a counting backend")
    p.add_argument("file", nargs="?")
    p.add_argument("--monomial")
    p.add_argument("--graph", help="estimate perfect matchings of this bipartite graph instead")
    _add_backend(p)
    p = sub.add_parser("sum-pad", help="coefficient sum through the padding reduction")
    p.add_argument("file")
    _add_backend(p)
    p = sub.add_parser("hybrid", help="coefficient in F1*F2 with F1 = first K clauses")
    p.add_argument("file")
    p.add_argument("--split", type=int, required=True)
    p.add_argument("--monomial", required=True)
    _add_backend(p)

    p = sub.add_parser("maxmlm", help="longest multilinear monomial")
    p.add_argument("file")
    p.add_argument("--mode", choices=["greedy", "exact"], default="greedy")
    p.add_argument("--limit", type=int, default=10**6)

    p = sub.add_parser("gen", help="build a reduction instance")
    p.add_argument("kind", choices=["kpath", "matching-xy", "matching-h", "perm", "indset", "2sat"])
    p.add_argument("input", help="graph, bigraph, CSV matrix or DIMACS file depending on kind")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--c", type=int, default=1)
    return parser


def _run(args, out) -> None:
    budget = _budget()
    cmd = args.command
    if cmd == "table":
        out.write(textio.format_table(_table(_load(args.file), budget)))
    elif cmd == "coeff":
        obj = _load(args.file)
        mono = textio.parse_monomial(args.monomial)
        if mono >> obj.n:
            raise ShapeError(f"monomial uses variables beyond x{obj.n}")
        out.write(f"{coefficient(_table(obj, budget), mono)}\n")
    elif cmd == "sum":
        out.write(f"{sum_coefficients(_table(_load(args.file), budget))}\n")
    elif cmd == "oracle":
        out.write(textio.format_table(oracle_expand(_load_poly(args.file), args.limit)))
    elif cmd == "perm":
        a = textio.parse_matrix(_read(args.matrix))
        value = permanent(a, budget) if args.method == "fold" else permanent_ryser(a)
        out.write(f"{value}\n")
    elif cmd == "matchings":
        g = textio.parse_bigraph(_read(args.graph))
        out.write(f"{count_perfect_matchings(g, budget)}\n")
    elif cmd == "estimate":
        backend = _backend(args)
        if args.graph is not None:
            if args.file is not None:
                raise UsageError("estimate takes either a polynomial file or --graph, not both")
            res = estimate_matchings(textio.parse_bigraph(_read(args.graph)), backend, budget)
        else:
            if args.file is None or args.monomial is None:
                raise UsageError("estimate needs a polynomial file and --monomial (or --graph)")
            f = _load_poly(args.file)
            res = approx_coefficient(f, textio.parse_monomial(args.monomial), backend, budget)
        out.write(_format_estimate(res))
    elif cmd == "sum-pad":
        out.write(_format_estimate(sum_via_padding(_load_poly(args.file), _backend(args), budget)))
    elif cmd == "hybrid":
        f = _load_poly(args.file)
        if not 0 <= args.split <= f.m:
            raise ShapeError(f"--split must lie in 0..{f.m}")
        f1 = PiSigmaPi(f.n, f.clauses[: args.split])
        f2 = PiSigmaPi(f.n, f.clauses[args.split :])
        res = hybrid_coefficient(f1, f2, textio.parse_monomial(args.monomial), _backend(args), budget)
        out.write("no\n" if res is None else _format_estimate(res))
    elif cmd == "maxmlm":
        f = _load_poly(args.file)
        sel = greedy_max_mlm(f) if args.mode == "greedy" else exact_max_mlm(f, args.limit)
        out.write(f"{textio.format_varset(sel.varset)} {sel.length}\n")
    elif cmd == "gen":
        out.write(_generate(args))


def _generate(args) -> str:
    text = _read(args.input)
    kind = args.kind
    if kind == "kpath":
        if args.k is None:
            raise UsageError("gen kpath needs --k")
        return textio.format_circuit(k_path_polynomial(textio.parse_graph(text), args.k, args.c))
    if kind == "matching-xy":
        return textio.format_poly(matching_polynomial_xy(textio.parse_bigraph(text)))
    if kind == "matching-h":
        return textio.format_poly(matching_polynomial_h(textio.parse_bigraph(text)))
    if kind == "perm":
        return textio.format_poly(permanent_polynomial(textio.parse_matrix(text)))
    if kind == "indset":
        return textio.format_poly(independent_set_polynomial(textio.parse_graph(text)))
    return textio.format_poly(twosat_polynomial(textio.parse_cnf(text)))


def main(argv=None, stdout=None, stderr=None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        _run(args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return 1
    except ResourceError as exc:
        where = f" (node {exc.node})" if exc.node is not None else ""
        err.write(f"mlmkit: resource limit: {exc}{where}\n")
        return 2
    except (MLMError, OSError) as exc:
        err.write(f"mlmkit: error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    return 0


def cli_dispatch(argv) -> tuple[int, str]:
    """Run a command and return ``(exit status, stdout text)``."""
    import io

    buf = io.StringIO()
    status = main(list(argv), stdout=buf, stderr=io.StringIO())
    return status, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
