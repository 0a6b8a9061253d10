"""
Coefficients of multilinear monomials
=====================================

A product of clauses is folded one clause at a time, keeping only the
multilinear part. The result is a table from variable sets to coefficients.
"""

from mlmkit import circuit_from_pisigmapi, coefficient, eval_circuit, eval_pisigmapi
from mlmkit import format_table, oracle_expand, parse_poly, sum_coefficients, varset

# (x1+x2)^2 expands to x1^2 + 2 x1 x2 + x2^2; only 2 x1 x2 survives
f = parse_poly("(x1 + x2) * (x1 + x2)")
table = eval_pisigmapi(f)
print(format_table(table), end="")

# terms can have coefficients and several variables
g = parse_poly("(x1*x2 + 3*x3) * (x3*x4 + -1*x1) * (x2 + x4 + 2)")
table = eval_pisigmapi(g)
print(format_table(table), end="")
print("coefficient of x1 x2 x3 x4:", coefficient(table, varset([0, 1, 2, 3])))
print("sum of all multilinear coefficients:", sum_coefficients(table))

# the brute-force expansion agrees, it just takes much longer on big inputs
assert oracle_expand(g) == table

# the same polynomial as an arithmetic circuit
c = circuit_from_pisigmapi(g)
print("circuit gates:", c.size)
assert eval_circuit(c) == table
