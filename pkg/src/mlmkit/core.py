"""Polynomial domain types and the multilinear-filtered table algebra.

Variable sets are plain Python ints used as bitmasks: bit ``i`` set means
variable ``x_i`` is present. Python ints are unbounded, so the same code path
covers one machine word and many.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

from .errors import ShapeError

VarSetLike = Union[int, Iterable[int]]


def varset(indices: Iterable[int]) -> int:
    """Bitmask for a collection of 0-based variable indices."""
    mask = 0
    for i in indices:
        if i < 0:
            raise ShapeError(f"negative variable index {i}")
        mask |= 1 << i
    return mask


def as_varset(pi: VarSetLike) -> int:
    if isinstance(pi, int):
        if pi < 0:
            raise ShapeError("variable set mask must be non-negative")
        return pi
    return varset(pi)


def members(mask: int) -> list[int]:
    """Sorted variable indices of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Term:
    """A coefficient times a product of variable powers.

    ``exponents`` is a sorted tuple of ``(variable, exponent)`` pairs with
    positive exponents; the empty tuple is the constant term.
    """

    exponents: tuple[tuple[int, int], ...] = ()
    coefficient: int = 1

    def __post_init__(self):
        merged: dict[int, int] = {}
        for var, exp in self.exponents:
            if var < 0:
                raise ShapeError(f"negative variable index {var}")
            if exp <= 0:
                raise ShapeError(f"exponent must be positive, got {exp} on x{var}")
            merged[var] = merged.get(var, 0) + exp
        object.__setattr__(self, "exponents", tuple(sorted(merged.items())))
        object.__setattr__(self, "coefficient", int(self.coefficient))

    @classmethod
    def of(cls, *variables: int, coefficient: int = 1) -> "Term":
        """Build a term from repeated variable indices, e.g. ``Term.of(0, 0, 2)`` is x0^2*x2."""
        return cls(tuple((v, 1) for v in variables), coefficient)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def is_multilinear(self) -> bool:
        return all(e == 1 for _, e in self.exponents)

    @property
    def support(self) -> int:
        return varset(v for v, _ in self.exponents)

    @property
    def length(self) -> float:
        # log2(1 + j) per variable; equals the variable count when multilinear
        return sum(math.log2(1 + e) for _, e in self.exponents)

    @property
    def max_variable(self) -> int:
        return self.exponents[-1][0] if self.exponents else -1


Clause = tuple[Term, ...]


@dataclass(frozen=True)
class PiSigmaPi:
    """A product of clauses, each clause a sum of terms, over variables ``x_0..x_{n-1}``."""

    n: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ShapeError("variable count must be non-negative")
        clauses = tuple(tuple(c) for c in self.clauses)
        for ci, clause in enumerate(clauses):
            for term in clause:
                if not isinstance(term, Term):
                    raise ShapeError(f"clause {ci} holds a non-Term entry {term!r}")
                if term.max_variable >= self.n:
                    raise ShapeError(
                        f"clause {ci} uses x{term.max_variable} but only {self.n} variables are declared"
                    )
        object.__setattr__(self, "clauses", clauses)

    @property
    def m(self) -> int:
        return len(self.clauses)

    @property
    def s(self) -> int:
        return max((len(c) for c in self.clauses), default=0)

    @property
    def t(self) -> int:
        return max((term.degree for c in self.clauses for term in c), default=0)

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.m, self.s, self.t

    @property
    def is_pisigma(self) -> bool:
        """True when every term is a single variable to the first power."""
        return all(term.degree == 1 for c in self.clauses for term in c)

    def __mul__(self, other: "PiSigmaPi") -> "PiSigmaPi":
        if not isinstance(other, PiSigmaPi):
            return NotImplemented
        return PiSigmaPi(max(self.n, other.n), self.clauses + other.clauses)


class Node(NamedTuple):
    """One circuit gate.

    ``kind`` is ``"var"`` (``arg`` = variable index), ``"const"`` (``arg`` =
    integer value), ``"add"`` (``arg`` = tuple of child ids) or ``"mul"``
    (``arg`` = pair of child ids).
    """

    kind: str
    arg: object


@dataclass(frozen=True)
class Circuit:
    """Arithmetic circuit in topological order; node ids are list positions."""

    n: int
    nodes: tuple[Node, ...]
    output: int

    def __post_init__(self):
        nodes = []
        for kind, arg in self.nodes:
            if kind in ("add", "mul"):
                arg = tuple(arg)
            nodes.append(Node(kind, arg))
        nodes = tuple(nodes)
        object.__setattr__(self, "nodes", nodes)
        for i, (kind, arg) in enumerate(nodes):
            if kind == "var":
                if not 0 <= arg < self.n:
                    raise ShapeError(f"node {i}: variable x{arg} outside 0..{self.n - 1}")
            elif kind == "const":
                if not isinstance(arg, int):
                    raise ShapeError(f"node {i}: constant must be an integer")
            elif kind in ("add", "mul"):
                children = arg
                if kind == "mul" and len(children) != 2:
                    raise ShapeError(f"node {i}: mul gate needs exactly 2 inputs, got {len(children)}")
                if kind == "add" and not children:
                    raise ShapeError(f"node {i}: add gate needs at least one input")
                for c in children:
                    if not 0 <= c < i:
                        raise ShapeError(f"node {i}: child {c} does not precede it")
            else:
                raise ShapeError(f"node {i}: unknown gate kind {kind!r}")
        if not 0 <= self.output < len(nodes):
            raise ShapeError(f"output node {self.output} does not exist")

    @property
    def size(self) -> int:
        return len(self.nodes)


class MultilinearTable(Mapping[int, int]):
    """Immutable map from variable-set bitmask to a nonzero integer coefficient."""

    __slots__ = ("n", "_entries")

    def __init__(self, n: int, entries: Mapping[VarSetLike, int] | None = None):
        self.n = n
        clean: dict[int, int] = {}
        limit = 1 << n
        for key, coef in (entries or {}).items():
            mask = as_varset(key)
            if mask >= limit:
                raise ShapeError(f"key {members(mask)} outside a universe of {n} variables")
            clean[mask] = clean.get(mask, 0) + int(coef)
        self._entries = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, n: int, entries: dict[int, int]) -> "MultilinearTable":
        # caller guarantees canonical keys; zeros are still filtered here
        table = cls.__new__(cls)
        table.n = n
        table._entries = {k: v for k, v in entries.items() if v}
        return table

    @classmethod
    def one(cls, n: int) -> "MultilinearTable":
        return cls._raw(n, {0: 1})

    def __getitem__(self, key: VarSetLike) -> int:
        return self._entries[as_varset(key)]

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, MultilinearTable):
            return self.n == other.n and self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self._entries.items())))

    def sorted_items(self) -> list[tuple[list[int], int]]:
        """Entries ordered by key cardinality, then lexicographic variable list."""
        rows = [(members(k), v) for k, v in self._entries.items()]
        rows.sort(key=lambda kv: (len(kv[0]), kv[0]))
        return rows

    def __repr__(self):
        body = ", ".join(
            ("*".join(f"x{i}" for i in vs) or "1") + f": {c}" for vs, c in self.sorted_items()
        )
        return f"MultilinearTable(n={self.n}, {{{body}}})"


def _check_same_universe(a: MultilinearTable, b: MultilinearTable) -> None:
    if a.n != b.n:
        raise ShapeError(f"tables over {a.n} and {b.n} variables cannot be combined")


def table_add(a: MultilinearTable, b: MultilinearTable) -> MultilinearTable:
    _check_same_universe(a, b)
    out = dict(a._entries)
    for k, v in b._entries.items():
        out[k] = out.get(k, 0) + v
    return MultilinearTable._raw(a.n, out)


def mul_entries(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    """Product of two coefficient dicts, dropping every overlapping key pair."""
    if len(a) > len(b):
        a, b = b, a
    out: dict[int, int] = {}
    get = out.get
    b_items = list(b.items())
    for s, x in a.items():
        for t, y in b_items:
            if s & t:
                continue
            k = s | t
            out[k] = get(k, 0) + x * y
    return out


def table_mul(a: MultilinearTable, b: MultilinearTable) -> MultilinearTable:
    """Multiply and keep only multilinear products (disjoint key pairs)."""
    _check_same_universe(a, b)
    return MultilinearTable._raw(a.n, mul_entries(a._entries, b._entries))


def clause_entries(clause: Sequence[Term]) -> dict[int, int]:
    out: dict[int, int] = {}
    for term in clause:
        if term.is_multilinear:
            k = term.support
            out[k] = out.get(k, 0) + term.coefficient
    return {k: v for k, v in out.items() if v}


def clause_to_table(clause: Sequence[Term], n: int) -> MultilinearTable:
    """Table of one clause; terms with a squared variable are dropped."""
    for term in clause:
        if term.max_variable >= n:
            raise ShapeError(f"term uses x{term.max_variable} but n = {n}")
    return MultilinearTable._raw(n, clause_entries(clause))
