"""
Polynomials built from graphs and formulas
==========================================

k-path detection, matchings, independent sets and MAX-2SAT all become
questions about multilinear monomials of a generated polynomial.
"""

from mlmkit import (
    BipartiteGraph,
    Cnf2Sat,
    Graph,
    Literal,
    coefficient,
    eval_circuit,
    eval_pisigmapi,
    exact_max_mlm,
    format_poly,
    independent_set_polynomial,
    k_path_polynomial,
    matching_polynomial_h,
    permanent_polynomial,
    twosat_polynomial,
)

# paths: the multilinear part has one entry per vertex set carrying a simple path,
# and each path is counted once per direction
square = Graph(4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)}))
table = eval_circuit(k_path_polynomial(square, 3))
print("3-vertex sets with a path:", {bin(k): v for k, v in table.items() if bin(k).count("1") == 3})

# the permanent polynomial and the matching polynomial of K_3,3
print(format_poly(permanent_polynomial([[1, 2], [3, 4]])))
h = matching_polynomial_h(BipartiteGraph.complete(3))
print("perfect matchings of K_3,3:", coefficient(eval_pisigmapi(h), (1 << h.n) - 1))

# independent sets: a maximum multilinear monomial has length alpha(G) * (n - 1)
path = Graph(4, frozenset({(0, 1), (1, 2), (2, 3)}))
f = independent_set_polynomial(path)
print("independent set bound:", exact_max_mlm(f).length // (path.n - 1))

# MAX-2SAT: twice the number of satisfiable clauses
x1, x2 = Literal(0, True), Literal(1, True)
nx1, nx2 = Literal(0, False), Literal(1, False)
cnf = Cnf2Sat(2, ((x1, x2), (nx1,), (nx2,)))
print("max satisfied clauses:", exact_max_mlm(twosat_polynomial(cnf)).length // 2)
