"""Coefficient and coefficient-sum estimation for product-of-linear-forms input.

Every scheme here reduces to counting perfect matchings in a bipartite graph
and hands that count to a :class:`CountBackend`. The exact backend counts by
clause folding. The Monte-Carlo backend uses Rasmussen's sequential
estimator: it is unbiased, but carries no worst-case (1 +/- eps) guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import PiSigmaPi, Term, VarSetLike, as_varset, members
from .counting import biadjacency, count_perfect_matchings
from .errors import ShapeError
from .evaluate import EvalBudget, eval_pisigmapi
from .graphs import BipartiteGraph


@dataclass(frozen=True)
class CountBackend:
    kind: str = "exact"
    samples: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("exact", "monte-carlo"):
            raise ShapeError(f"unknown backend kind {self.kind!r}")
        if self.kind == "monte-carlo" and self.samples < 1:
            raise ShapeError("monte-carlo backend needs at least one sample")

    @classmethod
    def exact(cls) -> "CountBackend":
        return cls("exact")

    @classmethod
    def monte_carlo(cls, samples: int, seed: int = 0) -> "CountBackend":
        return cls("monte-carlo", samples, seed)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def spawn(self, index: int) -> "CountBackend":
        """Backend with an independent stream: seed = first word of SeedSequence([seed, index])."""
        if self.is_exact:
            return self
        child = int(np.random.SeedSequence([self.seed, index]).generate_state(1)[0])
        return CountBackend(self.kind, self.samples, child)


@dataclass(frozen=True)
class ApproxResult:
    value: Fraction
    exact: bool
    stderr: float | None = None

    def __float__(self):
        return float(self.value)


def _exact(value) -> ApproxResult:
    return ApproxResult(Fraction(value), True, 0.0)


def _check_linear(f: PiSigmaPi) -> None:
    for ci, clause in enumerate(f.clauses):
        seen = set()
        for term in clause:
            if term.degree != 1:
                raise ShapeError(f"clause {ci} has a term of degree {term.degree}; need single variables")
            if term.coefficient != 1:
                raise ShapeError(f"clause {ci} has coefficient {term.coefficient}; need 1")
            v = term.exponents[0][0]
            if v in seen:
                raise ShapeError(f"clause {ci} lists x{v} twice")
            seen.add(v)


def reduce_coeff_to_matching(f: PiSigmaPi, pi: VarSetLike) -> BipartiteGraph | None:
    """Bipartite graph whose perfect matchings correspond to the copies of ``pi``.

    Left vertex i is clause i; right vertex j is the j-th smallest variable of
    ``pi``. Returns None when the coefficient is certainly zero: ``|pi|`` differs
    from the clause count, or some clause has no variable from ``pi``.
    """
    _check_linear(f)
    mask = as_varset(pi)
    if mask >> f.n:
        raise ShapeError(f"monomial uses variables outside 0..{f.n - 1}")
    variables = members(mask)
    if len(variables) != f.m:
        return None
    column = {v: j for j, v in enumerate(variables)}
    edges = set()
    for i, clause in enumerate(f.clauses):
        hit = [column[t.exponents[0][0]] for t in clause if t.exponents[0][0] in column]
        if not hit:
            return None
        edges.update((i, j) for j in hit)
    return BipartiteGraph(f.m, frozenset(edges))


def estimate_matchings(g: BipartiteGraph, backend: CountBackend, budget: EvalBudget | None = None) -> ApproxResult:
    if backend.is_exact:
        return _exact(count_perfect_matchings(g, budget))
    return _rasmussen(g, backend.samples, backend.seed)


def _rasmussen(g: BipartiteGraph, samples: int, seed: int) -> ApproxResult:
    # Each sample walks the left vertices in order, matches each to a uniform
    # free neighbour and multiplies the weight by the number of free
    # neighbours; a dead end gives weight 0.
    t = g.t
    if t == 0:
        return ApproxResult(Fraction(1), False, 0.0)
    rng = np.random.default_rng(seed)
    adj = np.array(biadjacency(g), dtype=bool)
    used = np.zeros((samples, t), dtype=bool)
    counts = np.empty((samples, t), dtype=np.int64)
    rows = np.arange(samples)
    for i in range(t):
        avail = adj[i] & ~used
        cnt = avail.sum(axis=1)
        counts[:, i] = cnt
        pick = rng.integers(0, np.maximum(cnt, 1))
        col = np.argmax(np.cumsum(avail, axis=1) > pick[:, None], axis=1)
        ok = cnt > 0
        used[rows[ok], col[ok]] = True

    weights = np.prod(counts, axis=1, dtype=np.int64 if t <= 20 else object)
    values, mult = np.unique(weights, return_counts=True)
    total = sum(int(v) * int(c) for v, c in zip(values, mult))
    total_sq = sum(int(v) * int(v) * int(c) for v, c in zip(values, mult))
    mean = Fraction(total, samples)
    if samples > 1:
        var = (Fraction(total_sq) - Fraction(total * total, samples)) / (samples - 1)
        stderr = math.sqrt(float(var) / samples)
    else:
        stderr = math.inf
    return ApproxResult(mean, False, stderr)


def approx_coefficient(
    f: PiSigmaPi, pi: VarSetLike, backend: CountBackend, budget: EvalBudget | None = None
) -> ApproxResult:
    g = reduce_coeff_to_matching(f, pi)
    if g is None:
        return _exact(0)
    return estimate_matchings(g, backend, budget)


def sum_via_padding(f: PiSigmaPi, backend: CountBackend, budget: EvalBudget | None = None) -> ApproxResult:
    """Sum of all multilinear coefficients via ``F * (x_0 + ... + x_{n-1})^(n-m)``.

    In the padded product only ``x_0 ... x_{n-1}`` can be multilinear, and its
    coefficient is the wanted sum times (n - m)!.
    """
    _check_linear(f)
    n, m = f.n, f.m
    if m > n:
        return _exact(0)
    pad = tuple(Term.of(v) for v in range(n))
    padded = PiSigmaPi(n, f.clauses + (pad,) * (n - m))
    est = approx_coefficient(padded, (1 << n) - 1, backend, budget)
    scale = math.factorial(n - m)
    if est.exact:
        q, r = divmod(est.value.numerator, scale)
        assert r == 0 and est.value.denominator == 1
        return _exact(q)
    stderr = None if est.stderr is None else est.stderr / scale
    return ApproxResult(est.value / scale, False, stderr)


def hybrid_coefficient(
    f1: PiSigmaPi,
    f2: PiSigmaPi,
    pi: VarSetLike,
    backend: CountBackend,
    budget: EvalBudget | None = None,
) -> ApproxResult | None:
    """Coefficient of ``pi`` in ``f1 * f2`` where only ``f2`` must be linear.

    ``f1`` is expanded exactly; each of its multilinear monomials ``psi``
    inside ``pi`` contributes ``c(f1, psi) * c(f2, pi minus psi)``, the
    second factor estimated by the backend. Returns None ("no") when no
    monomial of ``f1`` fits inside ``pi``.
    """
    if f1.n != f2.n:
        raise ShapeError(f"factors use {f1.n} and {f2.n} variables; the universe must be shared")
    _check_linear(f2)
    mask = as_varset(pi)
    if mask >> f1.n:
        raise ShapeError(f"monomial uses variables outside 0..{f1.n - 1}")
    expansion = eval_pisigmapi(f1, budget)
    candidates = sorted((psi, b) for psi, b in expansion.items() if psi & mask == psi)
    if not candidates:
        return None
    total = Fraction(0)
    exact = True
    var = 0.0
    for idx, (psi, b) in enumerate(candidates):
        est = approx_coefficient(f2, mask & ~psi, backend.spawn(idx), budget)
        total += b * est.value
        exact = exact and est.exact
        var += (b * (est.stderr or 0.0)) ** 2
    if exact:
        return _exact(total)
    return ApproxResult(total, False, math.sqrt(var))
