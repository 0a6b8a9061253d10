"""Encoders that turn graphs, matrices and formulas into polynomials.

Variable numbering for each encoder is fixed so that printed instances are
stable:

* ``matching_polynomial_xy``: left vertex i is ``x_i`` (index i), right vertex
  j is ``y_j`` (index t + j).
* ``matching_polynomial_h`` and ``permanent_polynomial``: column / right
  vertex j is ``x_j``.
* ``independent_set_polynomial``: one variable per edge, edges in
  lexicographic order, then the padding variables of vertex 0, vertex 1, ...
* ``twosat_polynomial``: formula variables in increasing order each receive a
  consecutive block of 2 or 4 fresh variables, only if they occur at all.
"""

from __future__ import annotations

from typing import Sequence

from .core import Circuit, Node, PiSigmaPi, Term
from .errors import ShapeError
from .graphs import BipartiteGraph, Cnf2Sat, Graph


def k_path_polynomial(g: Graph, k: int, c: int = 1) -> Circuit:
    """Circuit for the sum over vertices of the length-k walk polynomials.

    The level-j polynomial of vertex i is ``x_i^c`` times the sum of the
    level-(j-1) polynomials of its neighbours; each is built once and shared.
    With ``c == 1`` the coefficient of ``x_S`` (``|S| == k``) counts the
    directed simple paths whose vertex set is S.
    """
    if k < 1 or c < 1:
        raise ShapeError("k and c must be at least 1")
    nodes: list[Node] = []

    def emit(node):
        nodes.append(node)
        return len(nodes) - 1

    power = []
    for v in range(g.n):
        cur = emit(Node("var", v))
        base = cur
        for _ in range(c - 1):
            cur = emit(Node("mul", (cur, base)))
        power.append(cur)

    adj = [g.neighbors(v) for v in range(g.n)]
    # None marks a level polynomial that is identically zero
    level: list[int | None] = list(power)
    for _ in range(k - 1):
        nxt: list[int | None] = []
        for v in range(g.n):
            parts = [level[u] for u in adj[v] if level[u] is not None]
            if not parts:
                nxt.append(None)
                continue
            total = parts[0] if len(parts) == 1 else emit(Node("add", tuple(parts)))
            nxt.append(emit(Node("mul", (power[v], total))))
        level = nxt

    tops = [p for p in level if p is not None]
    if not tops:
        out = emit(Node("const", 0))
    elif len(tops) == 1:
        out = tops[0]
    else:
        out = emit(Node("add", tuple(tops)))
    return Circuit(g.n, tuple(nodes), out)


def matching_polynomial_xy(g: BipartiteGraph) -> PiSigmaPi:
    """One clause per left vertex: sum of ``x_i * y_j`` over its edges (2t variables)."""
    t = g.t
    clauses = [tuple(Term.of(i, t + j) for j in g.neighbors(i)) for i in range(t)]
    return PiSigmaPi(2 * t, tuple(clauses))


def matching_polynomial_h(g: BipartiteGraph) -> PiSigmaPi:
    """One clause per left vertex: sum of the right-vertex variables it touches."""
    clauses = [tuple(Term.of(j) for j in g.neighbors(i)) for i in range(g.t)]
    return PiSigmaPi(g.t, tuple(clauses))


def permanent_polynomial(a: Sequence[Sequence[int]]) -> PiSigmaPi:
    """Row i becomes the clause ``sum_j a[i][j] * x_j``; zero entries are omitted."""
    rows = square_matrix(a)
    n = len(rows)
    clauses = [tuple(Term.of(j, coefficient=v) for j, v in enumerate(row) if v) for row in rows]
    return PiSigmaPi(n, tuple(clauses))


def square_matrix(a: Sequence[Sequence[int]]) -> list[list[int]]:
    rows = [[int(v) for v in row] for row in a]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ShapeError(f"matrix is not square: row {i} has {len(row)} entries, expected {n}")
    return rows


def independent_set_polynomial(g: Graph) -> PiSigmaPi:
    """n copies of ``T(v_0) + ... + T(v_{n-1})``.

    ``T(v)`` multiplies the variables of the edges at v with enough padding
    variables private to v to bring every term to length ``n - 1``. Two terms
    share a variable exactly when their vertices are adjacent.
    """
    n = g.n
    edges = sorted(g.edges)
    edge_var = {e: idx for idx, e in enumerate(edges)}
    nxt = len(edges)
    terms = []
    for v in range(n):
        own = [edge_var[e] for e in edges if v in e]
        pad = list(range(nxt, nxt + (n - 1 - len(own))))
        nxt += len(pad)
        terms.append(Term.of(*own, *pad))
    clause = tuple(terms)
    return PiSigmaPi(nxt, tuple(clause for _ in range(n)))


def _occurrences(f: Cnf2Sat) -> dict[int, list[tuple[int, int, bool]]]:
    occ: dict[int, list[tuple[int, int, bool]]] = {}
    for ci, clause in enumerate(f.clauses):
        for li, lit in enumerate(clause):
            occ.setdefault(lit.var, []).append((ci, li, lit.positive))
    return occ


def check_restricted(f: Cnf2Sat) -> None:
    """Raise unless every variable occurs at most 3 times, and 3 times only as x, x, ~x."""
    for var, occ in _occurrences(f).items():
        pos = sum(1 for _, _, p in occ if p)
        if len(occ) > 3:
            raise ShapeError(f"variable {var} occurs {len(occ)} times (at most 3 allowed)")
        if len(occ) == 3 and pos != 2:
            raise ShapeError(
                f"variable {var} occurs 3 times but not as two positive and one negative literal"
            )


def twosat_polynomial(f: Cnf2Sat) -> PiSigmaPi:
    """Replace each literal occurrence by a degree-2 term over fresh variables.

    The replacement makes two chosen literals share a variable exactly when
    they are complementary, so a set of clauses is simultaneously satisfiable
    iff one term per clause can be picked pairwise disjoint.
    """
    check_restricted(f)
    occ = _occurrences(f)
    replacement: dict[tuple[int, int], Term] = {}
    nxt = 0
    for var in sorted(occ):
        hits = occ[var]
        polarities = [p for _, _, p in hits]
        if len(hits) == 1 or (len(hits) == 2 and polarities[0] != polarities[1]):
            y = (nxt, nxt + 1)
            nxt += 2
            for ci, li, _ in hits:
                replacement[ci, li] = Term.of(*y)
            continue
        y1, y2, y3, y4 = range(nxt, nxt + 4)
        nxt += 4
        same = [(ci, li) for ci, li, p in hits if p == polarities[0]] if len(hits) == 2 else [
            (ci, li) for ci, li, p in hits if p
        ]
        replacement[same[0]] = Term.of(y1, y2)
        replacement[same[1]] = Term.of(y3, y4)
        if len(hits) == 3:
            neg = next((ci, li) for ci, li, p in hits if not p)
            replacement[neg] = Term.of(y1, y3)
    clauses = [
        tuple(replacement[ci, li] for li in range(len(clause))) for ci, clause in enumerate(f.clauses)
    ]
    return PiSigmaPi(nxt, tuple(clauses))
