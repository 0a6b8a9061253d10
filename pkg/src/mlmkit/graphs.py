"""Small immutable graph and formula containers used by the reductions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import ShapeError


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``; edges stored as sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ShapeError(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ShapeError(f"edge ({u}, {v}) outside 0..{self.n - 1}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def neighbors(self, v: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v})

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with ``t`` left and ``t`` right vertices; edge ``(i, j)`` joins left i to right j."""

    t: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (0 <= i < self.t and 0 <= j < self.t):
                raise ShapeError(f"edge ({i}, {j}) outside 0..{self.t - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, t: int) -> "BipartiteGraph":
        return cls(t, frozenset((i, j) for i in range(t) for j in range(t)))

    def neighbors(self, i: int) -> list[int]:
        return sorted(j for a, j in self.edges if a == i)


class Literal(NamedTuple):
    var: int
    positive: bool = True

    def __str__(self):
        return f"x{self.var}" if self.positive else f"~x{self.var}"


@dataclass(frozen=True)
class Cnf2Sat:
    """2-CNF formula; every clause holds one or two literals over variables ``0..nvars-1``."""

    nvars: int
    clauses: tuple[tuple[Literal, ...], ...] = ()

    def __post_init__(self):
        clauses = []
        for ci, clause in enumerate(self.clauses):
            lits = tuple(Literal(*lit) for lit in clause)
            if not 1 <= len(lits) <= 2:
                raise ShapeError(f"clause {ci} has {len(lits)} literals; expected 1 or 2")
            for lit in lits:
                if not 0 <= lit.var < self.nvars:
                    raise ShapeError(f"clause {ci} uses variable {lit.var} outside 0..{self.nvars - 1}")
            clauses.append(lits)
        object.__setattr__(self, "clauses", tuple(clauses))

    def satisfied(self, assignment: Sequence[bool]) -> int:
        """Number of clauses satisfied by a truth assignment."""
        return sum(
            any(assignment[lit.var] == lit.positive for lit in clause) for clause in self.clauses
        )
