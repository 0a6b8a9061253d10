"""Text formats for polynomials, circuits, graphs, matrices and 2-CNF formulas.

Variables are 1-based in text (``x1``) and 0-based in memory. Lines whose
first non-blank character is ``#`` are comments in every format except CSV
and DIMACS (which uses ``c`` comment lines).

Polynomial grammar, whitespace (including newlines) ignored::

    [vars <n>]
    polynomial := clause ('*' clause)*          (empty body: empty product)
    clause     := '(' term ('+' term)* ')' | '(' ')'
    term       := [int '*'] factor ('*' factor)* | int
    factor     := 'x' index ['^' exp]
    int        := ['-'] digits

Circuit format, one gate per line, ids are arbitrary tokens::

    [vars <n>]
    <id> var x<k>
    <id> const <int>
    <id> add <id> <id> ...
    <id> mul <id> <id>
    out <id>
"""

from __future__ import annotations

import csv
import io
import re
from typing import Iterator

from .core import Circuit, MultilinearTable, Node, PiSigmaPi, Term, members
from .errors import ParseError
from .graphs import BipartiteGraph, Cnf2Sat, Graph, Literal

_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+)|(?P<int>-?\d+)|(?P<sym>[()*+^])|(?P<bad>\S))")


def _strip_comments(text: str) -> list[str]:
    return ["" if line.lstrip().startswith("#") else line for line in text.splitlines()]


def _split_header(lines: list[str], keyword: str) -> tuple[int | None, int]:
    """Find an optional ``<keyword> <n>`` header on the first non-blank line."""
    for lineno, line in enumerate(lines):
        if not line.strip():
            continue
        parts = line.split()
        if parts[0] != keyword:
            return None, lineno
        if len(parts) != 2 or not parts[1].isdigit():
            raise ParseError(f"expected '{keyword} <count>'", lineno + 1, 1)
        lines[lineno] = ""
        return int(parts[1]), lineno + 1
    return None, len(lines)


class _Tokens:
    def __init__(self, lines: list[str]):
        self.items: list[tuple[str, str, int, int]] = []
        for lineno, line in enumerate(lines, 1):
            pos = 0
            while pos < len(line):
                mt = _TOKEN.match(line, pos)
                if mt is None:
                    break
                kind = mt.lastgroup
                col = mt.start(kind) + 1
                if kind == "bad":
                    raise ParseError(f"unexpected character {mt.group(kind)!r}", lineno, col)
                self.items.append((kind, mt.group(kind), lineno, col))
                pos = mt.end()
        self.pos = 0
        self.end_pos = (len(lines), (len(lines[-1]) + 1) if lines else 1)

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else None

    def take(self, expected: str | None = None, kind: str | None = None):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input, expected {expected or kind}", *self.end_pos)
        if (expected is not None and tok[1] != expected) or (kind is not None and tok[0] != kind):
            raise ParseError(f"expected {expected or kind}, found {tok[1]!r}", tok[2], tok[3])
        self.pos += 1
        return tok


def _factor(toks: _Tokens) -> tuple[int, int]:
    _, text, line, col = toks.take(kind="var")
    index = int(text[1:])
    if index == 0:
        raise ParseError("variable indices start at x1", line, col)
    exp = 1
    nxt = toks.peek()
    if nxt is not None and nxt[1] == "^":
        toks.take("^")
        _, etext, eline, ecol = toks.take(kind="int")
        exp = int(etext)
        if exp <= 0:
            raise ParseError("exponent must be positive", eline, ecol)
    return index - 1, exp


def _term(toks: _Tokens) -> Term:
    tok = toks.peek()
    coef = 1
    factors = []
    if tok is not None and tok[0] == "int":
        toks.take()
        coef = int(tok[1])
        nxt = toks.peek()
        if nxt is None or nxt[1] != "*":
            return Term((), coef)
        toks.take("*")
    factors.append(_factor(toks))
    while (nxt := toks.peek()) is not None and nxt[1] == "*":
        toks.take("*")
        factors.append(_factor(toks))
    return Term(tuple(factors), coef)


def parse_poly(text: str) -> PiSigmaPi:
    lines = _strip_comments(text)
    declared, _ = _split_header(lines, "vars")
    toks = _Tokens(lines)
    clauses = []
    if toks.peek() is not None:
        while True:
            toks.take("(")
            clause = []
            if toks.peek() is not None and toks.peek()[1] == ")":
                toks.take(")")
            else:
                clause.append(_term(toks))
                while toks.peek() is not None and toks.peek()[1] == "+":
                    toks.take("+")
                    clause.append(_term(toks))
                toks.take(")")
            clauses.append(tuple(clause))
            if toks.peek() is None:
                break
            toks.take("*")
    used = max((t.max_variable + 1 for c in clauses for t in c), default=0)
    if declared is None:
        declared = used
    elif used > declared:
        raise ParseError(f"x{used} used but only {declared} variables declared")
    return PiSigmaPi(declared, tuple(clauses))


def _format_term(term: Term) -> str:
    factors = "*".join(f"x{v + 1}" + (f"^{e}" if e != 1 else "") for v, e in term.exponents)
    if not factors:
        return str(term.coefficient)
    if term.coefficient == 1:
        return factors
    return f"{term.coefficient}*{factors}"


def format_poly(f: PiSigmaPi) -> str:
    clauses = ["(" + " + ".join(_format_term(t) for t in clause) + ")" for clause in f.clauses]
    body = " *\n".join(clauses)
    return f"vars {f.n}\n" + (body + "\n" if body else "")


def parse_monomial(text: str) -> int:
    """Bitmask of a multilinear monomial such as ``x1*x3``; ``1`` is the empty monomial."""
    text = text.strip()
    if text == "1":
        return 0
    mask = 0
    for part in text.split("*"):
        part = part.strip()
        if not re.fullmatch(r"x\d+", part) or int(part[1:]) == 0:
            raise ParseError(f"bad monomial factor {part!r}")
        bit = 1 << (int(part[1:]) - 1)
        if mask & bit:
            raise ParseError(f"{part} repeated; monomial must be multilinear")
        mask |= bit
    return mask


def format_varset(mask: int) -> str:
    return ",".join(f"x{v + 1}" for v in members(mask)) or "()"


def format_table(t: MultilinearTable) -> str:
    rows = []
    for vs, coef in t.sorted_items():
        name = ",".join(f"x{v + 1}" for v in vs) or "()"
        rows.append(f"{name} {coef}")
    return "".join(r + "\n" for r in rows)


def parse_circuit(text: str) -> Circuit:
    lines = _strip_comments(text)
    declared, _ = _split_header(lines, "vars")
    ids: dict[str, int] = {}
    nodes: list[Node] = []
    output = None
    for lineno, line in enumerate(lines, 1):
        parts = line.split()
        if not parts:
            continue
        if output is not None:
            raise ParseError("nothing may follow the 'out' line", lineno, 1)
        if parts[0] == "out":
            if len(parts) != 2:
                raise ParseError("expected 'out <id>'", lineno, 1)
            output = _ref(ids, parts[1], lineno, line)
            continue
        if len(parts) < 2:
            raise ParseError("expected '<id> <gate> ...'", lineno, 1)
        name, kind, args = parts[0], parts[1], parts[2:]
        if name in ids:
            raise ParseError(f"node id {name!r} defined twice", lineno, 1)
        if kind == "var":
            if len(args) != 1 or not re.fullmatch(r"x\d+", args[0]) or int(args[0][1:]) == 0:
                raise ParseError("expected '<id> var x<k>' with k >= 1", lineno, line.find(kind) + 1)
            node = Node("var", int(args[0][1:]) - 1)
        elif kind == "const":
            if len(args) != 1 or not re.fullmatch(r"-?\d+", args[0]):
                raise ParseError("expected '<id> const <int>'", lineno, line.find(kind) + 1)
            node = Node("const", int(args[0]))
        elif kind == "add":
            if not args:
                raise ParseError("add needs at least one input", lineno, line.find(kind) + 1)
            node = Node("add", tuple(_ref(ids, a, lineno, line) for a in args))
        elif kind == "mul":
            if len(args) != 2:
                raise ParseError(f"mul takes exactly 2 inputs, got {len(args)}", lineno, line.find(kind) + 1)
            node = Node("mul", tuple(_ref(ids, a, lineno, line) for a in args))
        else:
            raise ParseError(f"unknown gate {kind!r}", lineno, line.find(kind) + 1)
        ids[name] = len(nodes)
        nodes.append(node)
    if output is None:
        raise ParseError("missing 'out <id>' line")
    used = max((nd.arg + 1 for nd in nodes if nd.kind == "var"), default=0)
    if declared is None:
        declared = used
    elif used > declared:
        raise ParseError(f"x{used} used but only {declared} variables declared")
    return Circuit(declared, tuple(nodes), output)


def _ref(ids: dict[str, int], name: str, lineno: int, line: str) -> int:
    if name not in ids:
        raise ParseError(f"reference to undefined node {name!r}", lineno, line.find(name) + 1)
    return ids[name]


def format_circuit(c: Circuit) -> str:
    out = [f"vars {c.n}"]
    for i, (kind, arg) in enumerate(c.nodes):
        if kind == "var":
            out.append(f"n{i} var x{arg + 1}")
        elif kind == "const":
            out.append(f"n{i} const {arg}")
        else:
            out.append(f"n{i} {kind} " + " ".join(f"n{ch}" for ch in arg))
    out.append(f"out n{c.output}")
    return "\n".join(out) + "\n"


def _edge_lines(text: str, keyword: str) -> tuple[int, Iterator[tuple[int, int, int]]]:
    lines = _strip_comments(text)
    count, _ = _split_header(lines, keyword)
    if count is None:
        raise ParseError(f"missing '{keyword} <n>' header", 1, 1)

    def edges():
        for lineno, line in enumerate(lines, 1):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != 3 or parts[0] != "e" or not (parts[1].isdigit() and parts[2].isdigit()):
                raise ParseError("expected 'e <u> <v>'", lineno, 1)
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= count and 1 <= v <= count):
                raise ParseError(f"vertex out of range 1..{count}", lineno, 1)
            yield lineno, u - 1, v - 1

    return count, edges()


def parse_graph(text: str) -> Graph:
    n, edges = _edge_lines(text, "graph")
    pairs = set()
    for lineno, u, v in edges:
        if u == v:
            raise ParseError("self-loops are not allowed", lineno, 1)
        pairs.add((u, v))
    return Graph(n, frozenset(pairs))


def parse_bigraph(text: str) -> BipartiteGraph:
    t, edges = _edge_lines(text, "bigraph")
    return BipartiteGraph(t, frozenset((i, j) for _, i, j in edges))


def format_graph(g: Graph) -> str:
    return f"graph {g.n}\n" + "".join(f"e {u + 1} {v + 1}\n" for u, v in sorted(g.edges))


def format_bigraph(g: BipartiteGraph) -> str:
    return f"bigraph {g.t}\n" + "".join(f"e {i + 1} {j + 1}\n" for i, j in sorted(g.edges))


def parse_matrix(text: str) -> list[list[int]]:
    rows = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), 1):
        if not row or all(not cell.strip() for cell in row):
            continue
        try:
            rows.append([int(cell) for cell in row])
        except ValueError:
            raise ParseError("matrix entries must be integers", lineno, 1) from None
    for lineno, row in enumerate(rows, 1):
        if len(row) != len(rows):
            raise ParseError(f"matrix is not square ({len(rows)} rows, {len(row)} columns)", lineno, 1)
    return rows


def parse_cnf(text: str) -> Cnf2Sat:
    """DIMACS CNF: ``p cnf <vars> <clauses>`` header, clauses terminated by ``0``."""
    nvars = None
    clauses = []
    current: list[Literal] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno, 1)
            nvars = int(parts[2])
            continue
        if nvars is None:
            raise ParseError("clause before the 'p cnf' header", lineno, 1)
        for tok in parts:
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", lineno, line.find(tok) + 1) from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > nvars:
                raise ParseError(f"literal {lit} outside 1..{nvars}", lineno, line.find(tok) + 1)
            else:
                current.append(Literal(abs(lit) - 1, lit > 0))
    if nvars is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        clauses.append(tuple(current))
    return Cnf2Sat(nvars, tuple(clauses))


def format_cnf(f: Cnf2Sat) -> str:
    out = [f"p cnf {f.nvars} {len(f.clauses)}"]
    for clause in f.clauses:
        out.append(" ".join(str(l.var + 1 if l.positive else -(l.var + 1)) for l in clause) + " 0")
    return "\n".join(out) + "\n"
