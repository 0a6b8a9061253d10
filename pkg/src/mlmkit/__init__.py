"""Exact and approximate coefficients of multilinear monomials.

Polynomials come either as products of sums of terms (:class:`PiSigmaPi`) or
as arithmetic circuits (:class:`Circuit`). Results are
:class:`MultilinearTable` objects mapping variable-set bitmasks to integers.
"""

from .approx import (
    ApproxResult,
    CountBackend,
    approx_coefficient,
    estimate_matchings,
    hybrid_coefficient,
    reduce_coeff_to_matching,
    sum_via_padding,
)
from .core import (
    Circuit,
    MultilinearTable,
    Node,
    PiSigmaPi,
    Term,
    clause_to_table,
    members,
    table_add,
    table_mul,
    varset,
)
from .counting import biadjacency, count_perfect_matchings, permanent, permanent_ryser
from .errors import MLMError, ParseError, ResourceError, ShapeError
from .evaluate import (
    EvalBudget,
    circuit_from_pisigmapi,
    coefficient,
    eval_circuit,
    eval_pisigmapi,
    oracle_expand,
    sum_coefficients,
)
from .generators import (
    independent_set_polynomial,
    k_path_polynomial,
    matching_polynomial_h,
    matching_polynomial_xy,
    permanent_polynomial,
    twosat_polynomial,
)
from .graphs import BipartiteGraph, Cnf2Sat, Graph, Literal
from .maxmlm import SelectedMonomial, exact_max_mlm, greedy_max_mlm
from .textio import format_circuit, format_poly, format_table, parse_circuit, parse_poly

__version__ = "0.1.0"
