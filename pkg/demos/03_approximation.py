"""
Approximate coefficients with a matching-count backend
======================================================

For products of sums of single variables, a coefficient is a perfect-matching
count. The backend either counts exactly or draws Monte-Carlo samples.
Monte-Carlo results come with a standard error but no worst-case guarantee.
"""

from mlmkit import (
    CountBackend,
    approx_coefficient,
    coefficient,
    eval_pisigmapi,
    hybrid_coefficient,
    parse_poly,
    reduce_coeff_to_matching,
    sum_coefficients,
    sum_via_padding,
    varset,
)

f = parse_poly("(x1+x2+x3) * (x2+x3+x4) * (x1+x3+x4) * (x1+x2+x4)")
pi = varset([0, 1, 2, 3])
print("graph for x1x2x3x4:", sorted(reduce_coeff_to_matching(f, pi).edges))
print("exact table:", coefficient(eval_pisigmapi(f), pi))

exact = CountBackend.exact()
mc = CountBackend.monte_carlo(samples=20000, seed=1)
print("exact backend:", approx_coefficient(f, pi, exact).value)
res = approx_coefficient(f, pi, mc)
print(f"monte-carlo: {float(res.value):.3f} +- {res.stderr:.3f}")

# padding with full clauses turns the sum of all coefficients into one coefficient
g = parse_poly("vars 5\n(x1+x2+x3) * (x3+x4+x5)")
print("sum of coefficients:", sum_coefficients(eval_pisigmapi(g)), "padded:", sum_via_padding(g, exact).value)

# a product whose first factor has longer terms: branch on its multilinear monomials
f1 = parse_poly("vars 7\n(x1*x2 + x3) * (x4 + x5)")
f2 = parse_poly("vars 7\n(x3+x5+x6) * (x5+x6+x7) * (x3+x6+x7) * (x3+x5+x7)")
pi = varset(range(7))
print("exact:", coefficient(eval_pisigmapi(f1 * f2), pi))
print("hybrid, exact backend:", hybrid_coefficient(f1, f2, pi, exact).value)
res = hybrid_coefficient(f1, f2, pi, mc)
print(f"hybrid, monte-carlo: {float(res.value):.3f} +- {res.stderr:.3f}")
