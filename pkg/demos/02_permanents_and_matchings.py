"""
Permanents and perfect matchings
================================

perm(A) is the coefficient of x1...xn in prod_i (sum_j a_ij x_j), and the
number of perfect matchings of a bipartite graph is the permanent of its
biadjacency matrix.
"""

import math
import time

import numpy as np

from mlmkit import BipartiteGraph, biadjacency, count_perfect_matchings, permanent, permanent_ryser

a = [[1, 2, 0], [-1, 3, 1], [2, 0, 4]]
print("perm via the fold:", permanent(a))
print("perm via Ryser:   ", permanent_ryser(a))

# all-ones matrices have permanent n!
for n in (8, 12, 16):
    start = time.perf_counter()
    value = permanent(np.ones((n, n), dtype=int).tolist())
    print(f"n={n:2d} perm={value} == {n}! {value == math.factorial(n)} ({time.perf_counter() - start:.2f}s)")

# a random bipartite graph, counted two ways
rng = np.random.default_rng(3)
t = 7
mask = rng.random((t, t)) < 0.5
g = BipartiteGraph(t, frozenset((i, j) for i in range(t) for j in range(t) if mask[i, j]))
print("edges:", len(g.edges))
print("perfect matchings:", count_perfect_matchings(g), "Ryser:", permanent_ryser(biadjacency(g)))
