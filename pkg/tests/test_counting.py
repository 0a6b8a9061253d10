import math
import random

import pytest

from mlmkit import (
    BipartiteGraph,
    EvalBudget,
    ResourceError,
    biadjacency,
    count_perfect_matchings,
    permanent,
    permanent_ryser,
)
from oracles import brute_matchings, naive_permanent, random_bigraph


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("n", range(0, 7))
def test_identity(n):
    assert permanent(identity(n)) == 1
    assert permanent_ryser(identity(n)) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_all_ones(n):
    ones = [[1] * n for _ in range(n)]
    assert permanent(ones) == math.factorial(n)
    assert permanent_ryser(ones) == math.factorial(n)


def test_random_4x4_against_naive():
    rng = random.Random(0)
    for _ in range(20):
        a = [[rng.randint(0, 5) for _ in range(4)] for _ in range(4)]
        assert permanent(a) == naive_permanent(a)


def test_random_5x5_cross_oracle():
    rng = random.Random(1)
    for _ in range(20):
        a = [[rng.randint(-3, 5) for _ in range(5)] for _ in range(5)]
        assert permanent_ryser(a) == permanent(a) == naive_permanent(a)


def test_ryser_guard():
    with pytest.raises(ResourceError):
        permanent_ryser([[0] * 31 for _ in range(31)])


def test_permanent_budget():
    with pytest.raises(ResourceError):
        permanent([[1] * 12 for _ in range(12)], EvalBudget(max_total_work=1000))


def test_row_and_column_permutation_invariance():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(1, 6)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        rp, cp = rng.sample(range(n), n), rng.sample(range(n), n)
        b = [[a[rp[i]][cp[j]] for j in range(n)] for i in range(n)]
        assert permanent(a) == permanent(b)


def test_row_scaling():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(1, 6)
        a = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        k, r = rng.randint(-4, 4), rng.randrange(n)
        b = [row[:] for row in a]
        b[r] = [k * v for v in b[r]]
        assert permanent(b) == k * permanent(a)


@pytest.mark.parametrize("n", range(1, 8))
def test_complete_bipartite(n):
    assert count_perfect_matchings(BipartiteGraph.complete(n)) == math.factorial(n)


def test_isolated_left_vertex():
    g = BipartiteGraph(3, frozenset({(0, 0), (0, 1), (2, 2)}))
    assert count_perfect_matchings(g) == 0


def test_random_t5_against_permanent():
    rng = random.Random(4)
    for _ in range(30):
        g = random_bigraph(rng, 5)
        assert count_perfect_matchings(g) == permanent(biadjacency(g)) == brute_matchings(g)


class TestBiadjacency:
    def test_complete(self):
        assert biadjacency(BipartiteGraph.complete(2)) == [[1, 1], [1, 1]]

    def test_empty(self):
        assert biadjacency(BipartiteGraph(3)) == [[0] * 3] * 3

    def test_single_edge(self):
        assert biadjacency(BipartiteGraph(2, frozenset({(0, 1)}))) == [[0, 1], [0, 0]]
