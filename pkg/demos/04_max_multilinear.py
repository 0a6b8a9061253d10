"""
Longest multilinear monomial
============================

Pick at most one term per clause, pairwise variable-disjoint, to cover as
many variables as possible. The greedy pass always takes the longest term
still available; the exact solver searches all choices.
"""

import random

from mlmkit import PiSigmaPi, Term, exact_max_mlm, format_poly, greedy_max_mlm, parse_poly

f = parse_poly("(x1*x2 + x3) * (x3*x4 + x1)")
sel = greedy_max_mlm(f)
print("greedy picks (clause, term):", sel.picks, "variables:", [v + 1 for v in sel.variables])
print("optimum length:", exact_max_mlm(f).length)

# one greedy choice can block a term in the same clause and one per variable
bad = parse_poly("(x1*x2 + x3) * (x1*x4) * (x2*x5)")
print(format_poly(bad))
print("greedy:", greedy_max_mlm(bad).length, "exact:", exact_max_mlm(bad).length)

# the ratio on random instances with terms of degree <= 2
rng = random.Random(0)
ratios = []
for _ in range(300):
    n = rng.randint(4, 12)
    clauses = tuple(
        tuple(Term.of(*rng.sample(range(n), rng.randint(1, 2))) for _ in range(rng.randint(1, 4)))
        for _ in range(rng.randint(1, 6))
    )
    f = PiSigmaPi(n, clauses)
    ratios.append(exact_max_mlm(f).length / max(1, greedy_max_mlm(f).length))
print(f"mean ratio {sum(ratios) / len(ratios):.3f}, worst {max(ratios):.3f}")
