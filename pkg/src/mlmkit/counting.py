"""Permanents and perfect-matching counts.

Both go through the clause-fold evaluator: the permanent is the coefficient of
``x_0 ... x_{n-1}`` in the product of the row forms, and the number of perfect
matchings is the same coefficient for the 0/1 biadjacency rows. Ryser's
inclusion-exclusion formula is kept as an independent check.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ResourceError
from .evaluate import EvalBudget, coefficient, eval_pisigmapi
from .generators import matching_polynomial_h, permanent_polynomial, square_matrix
from .graphs import BipartiteGraph

RYSER_MAX_N = 30


def permanent(a: Sequence[Sequence[int]], budget: EvalBudget | None = None) -> int:
    f = permanent_polynomial(a)
    return coefficient(eval_pisigmapi(f, budget), (1 << f.n) - 1)


def permanent_ryser(a: Sequence[Sequence[int]]) -> int:
    """Ryser's formula, with the column subsets visited in Gray-code order.

    perm(A) = sum over column sets S of (-1)^(n-|S|) prod_i sum_{j in S} a_ij
    """
    rows = square_matrix(a)
    n = len(rows)
    if n > RYSER_MAX_N:
        raise ResourceError(f"Ryser permanent limited to n <= {RYSER_MAX_N}, got {n}")
    if n == 0:
        return 1
    cols = [[rows[i][j] for i in range(n)] for j in range(n)]
    sums = [0] * n
    total = 0
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        col = cols[j]
        if gray >> j & 1:
            for i in range(n):
                sums[i] += col[i]
        else:
            for i in range(n):
                sums[i] -= col[i]
        prod = 1
        for s in sums:
            if not s:
                prod = 0
                break
            prod *= s
        if prod:
            size = bin(gray).count("1")
            total += -prod if (n - size) & 1 else prod
    return total


def count_perfect_matchings(g: BipartiteGraph, budget: EvalBudget | None = None) -> int:
    f = matching_polynomial_h(g)
    return coefficient(eval_pisigmapi(f, budget), (1 << g.t) - 1)


def biadjacency(g: BipartiteGraph) -> list[list[int]]:
    m = [[0] * g.t for _ in range(g.t)]
    for i, j in g.edges:
        m[i][j] = 1
    return m
