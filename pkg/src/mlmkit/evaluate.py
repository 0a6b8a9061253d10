"""Coefficient extraction for multilinear monomials.

Two evaluators produce a :class:`MultilinearTable`: a bottom-up pass over an
arithmetic circuit, and a clause fold for product-of-sums-of-products input.
``oracle_expand`` is an independent brute-force reference used in tests.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    Circuit,
    MultilinearTable,
    Node,
    PiSigmaPi,
    Term,
    VarSetLike,
    as_varset,
    clause_entries,
    mul_entries,
    varset,
)
from .errors import ResourceError, ShapeError

DEFAULT_ORACLE_LIMIT = 10**6


@dataclass(frozen=True)
class EvalBudget:
    """Caps on table size and on the number of coefficient multiplications."""

    max_table_entries: int = 1 << 24
    max_total_work: int = 10**10

    def __post_init__(self):
        if self.max_table_entries <= 0 or self.max_total_work <= 0:
            raise ShapeError("budget limits must be positive")


class _Meter:
    def __init__(self, budget: EvalBudget):
        self.budget = budget
        self.work = 0

    def charge(self, amount: int, node=None) -> None:
        self.work += amount
        if self.work > self.budget.max_total_work:
            raise ResourceError(
                f"work budget of {self.budget.max_total_work} multiplications exceeded", node=node
            )

    def check_size(self, entries: dict, node=None) -> None:
        if len(entries) > self.budget.max_table_entries:
            raise ResourceError(
                f"table grew to {len(entries)} entries (limit {self.budget.max_table_entries})",
                node=node,
            )


def eval_circuit(c: Circuit, budget: EvalBudget | None = None) -> MultilinearTable:
    """Multilinear part of a circuit's expansion, gate by gate.

    Only gates that feed the output are evaluated, and a gate's table is
    released after its last consumer.
    """
    meter = _Meter(budget or EvalBudget())
    live = _reachable(c)
    last_use = {}
    for i in range(len(c.nodes)):
        if not live[i]:
            continue
        kind, arg = c.nodes[i]
        if kind in ("add", "mul"):
            for ch in arg:
                last_use[ch] = i

    values: dict[int, dict[int, int]] = {}
    for i, (kind, arg) in enumerate(c.nodes):
        if not live[i]:
            continue
        if kind == "var":
            val = {1 << arg: 1}
        elif kind == "const":
            val = {0: arg} if arg else {}
        elif kind == "add":
            val = {}
            for ch in arg:
                src = values[ch]
                meter.charge(len(src), node=i)
                for k, v in src.items():
                    val[k] = val.get(k, 0) + v
            val = {k: v for k, v in val.items() if v}
        else:
            left, right = values[arg[0]], values[arg[1]]
            meter.charge(len(left) * len(right), node=i)
            val = {k: v for k, v in mul_entries(left, right).items() if v}
        meter.check_size(val, node=i)
        values[i] = val
        if kind in ("add", "mul"):
            for ch in set(arg):
                if last_use.get(ch) == i and ch != c.output:
                    del values[ch]
    return MultilinearTable._raw(c.n, values[c.output])


def _reachable(c: Circuit) -> list[bool]:
    live = [False] * len(c.nodes)
    live[c.output] = True
    for i in range(c.output, -1, -1):
        if live[i] and c.nodes[i].kind in ("add", "mul"):
            for ch in c.nodes[i].arg:
                live[ch] = True
    return live


def eval_pisigmapi(f: PiSigmaPi, budget: EvalBudget | None = None) -> MultilinearTable:
    """Fold the clauses together, discarding non-multilinear products at every step."""
    meter = _Meter(budget or EvalBudget())
    tables = [clause_entries(clause) for clause in f.clauses]
    if any(not t for t in tables):
        return MultilinearTable(f.n)
    # smallest clauses first keeps the intermediate tables small
    tables.sort(key=len)
    acc = {0: 1}
    for step, t in enumerate(tables):
        meter.charge(len(acc) * len(t), node=step)
        acc = mul_entries(acc, t)
        meter.check_size(acc, node=step)
        if not acc:
            break
    return MultilinearTable._raw(f.n, acc)


def coefficient(t: MultilinearTable, pi: VarSetLike) -> int:
    return t.get(as_varset(pi), 0)


def sum_coefficients(t: MultilinearTable) -> int:
    return sum(t.values())


def oracle_expand(f: PiSigmaPi, limit: int = DEFAULT_ORACLE_LIMIT) -> MultilinearTable:
    """Reference evaluator: expand every term choice, filter multilinear monomials last."""
    count = math.prod(len(c) for c in f.clauses)
    if count > limit:
        raise ResourceError(f"full expansion has {count} monomials (limit {limit})")
    monomials: dict[tuple[int, ...], int] = {}
    for choice in itertools.product(*f.clauses):
        exps = [0] * f.n
        coef = 1
        for term in choice:
            coef *= term.coefficient
            for v, e in term.exponents:
                exps[v] += e
        key = tuple(exps)
        monomials[key] = monomials.get(key, 0) + coef
    out = {}
    for exps, coef in monomials.items():
        if coef and all(e <= 1 for e in exps):
            out[varset(i for i, e in enumerate(exps) if e)] = coef
    return MultilinearTable(f.n, out)


def _term_node(term: Term, nodes: list, var_ids: dict[int, int]) -> int:
    def add(node):
        nodes.append(node)
        return len(nodes) - 1

    def var(v):
        if v not in var_ids:
            var_ids[v] = add(Node("var", v))
        return var_ids[v]

    factors = [var(v) for v, e in term.exponents for _ in range(e)]
    if term.coefficient != 1 or not factors:
        factors.insert(0, add(Node("const", term.coefficient)))
    cur = factors[0]
    for nxt in factors[1:]:
        cur = add(Node("mul", (cur, nxt)))
    return cur


def circuit_from_pisigmapi(f: PiSigmaPi) -> Circuit:
    """Equivalent circuit: one add gate per clause, a left-deep mul chain across clauses."""
    nodes: list[Node] = []
    var_ids: dict[int, int] = {}
    clause_ids = []
    for clause in f.clauses:
        if not clause:
            nodes.append(Node("const", 0))
            clause_ids.append(len(nodes) - 1)
            continue
        terms = [_term_node(term, nodes, var_ids) for term in clause]
        if len(terms) == 1:
            clause_ids.append(terms[0])
        else:
            nodes.append(Node("add", tuple(terms)))
            clause_ids.append(len(nodes) - 1)
    if not clause_ids:
        nodes.append(Node("const", 1))
        return Circuit(f.n, tuple(nodes), len(nodes) - 1)
    cur = clause_ids[0]
    for nxt in clause_ids[1:]:
        nodes.append(Node("mul", (cur, nxt)))
        cur = len(nodes) - 1
    return Circuit(f.n, tuple(nodes), cur)
