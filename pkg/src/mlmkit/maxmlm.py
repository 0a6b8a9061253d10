"""Maximum multilinear monomial: greedy approximation and exhaustive solver.

A selection picks at most one term per clause so that the chosen terms are
pairwise variable-disjoint; its length is the number of variables covered.
Terms with a repeated variable and constant terms are never picked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import PiSigmaPi, members, popcount
from .errors import ResourceError

DEFAULT_EXACT_LIMIT = 10**6


@dataclass(frozen=True)
class SelectedMonomial:
    picks: tuple[tuple[int, int], ...]
    varset: int

    @property
    def length(self) -> int:
        return popcount(self.varset)

    @property
    def variables(self) -> list[int]:
        return members(self.varset)


def _candidates(f: PiSigmaPi) -> list[list[tuple[int, int]]]:
    """Per clause: (term index, support mask) of every selectable term."""
    return [
        [(ti, term.support) for ti, term in enumerate(clause) if term.is_multilinear and term.degree > 0]
        for clause in f.clauses
    ]


def greedy_max_mlm(f: PiSigmaPi) -> SelectedMonomial:
    """Repeatedly take the longest term disjoint from everything taken so far.

    Ties go to the lowest clause index, then the lowest term index. When every
    term has at most ``lam`` variables the result is within a factor ``lam``
    of the optimum.
    """
    cands = _candidates(f)
    open_clauses = set(range(len(cands)))
    used = 0
    picks = []
    while True:
        best = None
        for ci in sorted(open_clauses):
            for ti, mask in cands[ci]:
                if mask & used:
                    continue
                size = popcount(mask)
                if best is None or size > best[0]:
                    best = (size, ci, ti, mask)
        if best is None:
            break
        _, ci, ti, mask = best
        picks.append((ci, ti))
        used |= mask
        open_clauses.discard(ci)
    picks.sort()
    return SelectedMonomial(tuple(picks), used)


def exact_max_mlm(f: PiSigmaPi, limit: int = DEFAULT_EXACT_LIMIT) -> SelectedMonomial:
    """Optimal selection by memoised search over (clause, used variables).

    Among optimal selections the lexicographically smallest pick sequence is
    returned.
    """
    leaves = math.prod(len(c) + 1 for c in f.clauses)
    if leaves > limit:
        raise ResourceError(f"search space has {leaves} leaves (limit {limit})")
    cands = [[(ti, mask, popcount(mask)) for ti, mask in c] for c in _candidates(f)]
    m = len(cands)
    memo: dict[tuple[int, int], int] = {}

    def best(i: int, used: int) -> int:
        if i == m:
            return 0
        key = (i, used)
        hit = memo.get(key)
        if hit is not None:
            return hit
        value = best(i + 1, used)
        for _, mask, size in cands[i]:
            if not mask & used:
                value = max(value, size + best(i + 1, used | mask))
        memo[key] = value
        return value

    best(0, 0)
    picks = []
    used = 0
    for i in range(m):
        target = best(i, used)
        for ti, mask, size in cands[i]:
            if not mask & used and size + best(i + 1, used | mask) == target:
                picks.append((i, ti))
                used |= mask
                break
    return SelectedMonomial(tuple(picks), used)
