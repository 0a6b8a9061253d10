import random

import pytest

from mlmkit import ParseError, PiSigmaPi, ShapeError, Term, eval_circuit, format_circuit, format_poly
from mlmkit import parse_circuit, parse_poly
from mlmkit.textio import (
    format_bigraph,
    format_cnf,
    format_graph,
    format_table,
    parse_bigraph,
    parse_cnf,
    parse_graph,
    parse_matrix,
    parse_monomial,
)
from mlmkit import Graph, BipartiteGraph, MultilinearTable, circuit_from_pisigmapi, k_path_polynomial
from oracles import random_pisigmapi, random_restricted_2cnf


class TestParsePoly:
    def test_header(self):
        f = parse_poly("vars 2\n(x1+x2)*(x1+x2)")
        assert f.n == 2 and f.m == 2 and [len(c) for c in f.clauses] == [2, 2]

    def test_coefficients(self):
        f = parse_poly("(3*x1*x2 + x3)")
        assert f.n == 3
        assert [t.coefficient for t in f.clauses[0]] == [3, 1]

    def test_exponent(self):
        (term,) = parse_poly("(x1^2)").clauses[0]
        assert term.exponents == ((0, 2),)

    def test_duplicate_factors_merge(self):
        (term,) = parse_poly("(x2*x1*x2)").clauses[0]
        assert term.exponents == ((0, 1), (1, 2))

    def test_constants_and_negatives(self):
        f = parse_poly("(-2*x1 + 5)*()")
        assert f.clauses == ((Term.of(0, coefficient=-2), Term((), 5)), ())

    def test_empty_body(self):
        assert parse_poly("vars 3\n") == PiSigmaPi(3, ())

    def test_multiline_and_comments(self):
        f = parse_poly("# comment\nvars 4\n(x1 +\n x2) *\n(x4)\n")
        assert f.n == 4 and f.m == 2

    @pytest.mark.parametrize(
        "text,line,col",
        [
            ("(x1 + )", 1, 7),
            ("(x1 x2)", 1, 5),
            ("(x0)", 1, 2),
            ("(x1^0)", 1, 5),
            ("vars 2\n(x1)\n*(y2)", 3, 3),
            ("(x1", 1, 4),
        ],
    )
    def test_errors_have_position(self, text, line, col):
        with pytest.raises(ParseError) as exc:
            parse_poly(text)
        assert (exc.value.line, exc.value.column) == (line, col)

    def test_declared_too_small(self):
        with pytest.raises(ShapeError):
            parse_poly("vars 1\n(x2)")

    def test_round_trip_random(self):
        rng = random.Random(0)
        for _ in range(200):
            f = random_pisigmapi(rng)
            assert parse_poly(format_poly(f)) == f


class TestParseCircuit:
    def test_sum(self):
        c = parse_circuit("a var x1\nb var x2\ns add a b\nout s\n")
        assert dict(eval_circuit(c)) == {1: 1, 2: 1}

    def test_shared_node(self):
        c = parse_circuit("a var x1\nb var x2\ns add a b\np mul s s\nq mul p s\nr add p q\nout r")
        assert c.size == 6

    def test_mul_arity(self):
        with pytest.raises(ParseError, match="exactly 2"):
            parse_circuit("n0 var x1\nn1 var x2\nn2 var x3\nn3 mul n0 n1 n2\nout n3")

    def test_forward_reference(self):
        with pytest.raises(ParseError, match="undefined"):
            parse_circuit("a add b\nb var x1\nout a")

    def test_missing_out(self):
        with pytest.raises(ParseError, match="missing"):
            parse_circuit("a var x1\n")

    def test_trailing_after_out(self):
        with pytest.raises(ParseError):
            parse_circuit("a var x1\nout a\nb var x2")

    def test_round_trip(self):
        rng = random.Random(1)
        for _ in range(50):
            c = circuit_from_pisigmapi(random_pisigmapi(rng))
            assert parse_circuit(format_circuit(c)) == c
        g = Graph(4, frozenset({(0, 1), (1, 2), (2, 3)}))
        c = k_path_polynomial(g, 3, c=2)
        assert parse_circuit(format_circuit(c)) == c


class TestOtherFormats:
    def test_graph(self):
        g = parse_graph("graph 3\ne 1 2\ne 3 2\n")
        assert g == Graph(3, frozenset({(0, 1), (1, 2)}))
        assert parse_graph(format_graph(g)) == g

    def test_graph_errors(self):
        with pytest.raises(ParseError):
            parse_graph("e 1 2")
        with pytest.raises(ParseError):
            parse_graph("graph 2\ne 1 3")
        with pytest.raises(ParseError):
            parse_graph("graph 2\ne 1 1")

    def test_bigraph(self):
        g = parse_bigraph("bigraph 2\ne 1 2\n")
        assert g == BipartiteGraph(2, frozenset({(0, 1)}))
        assert parse_bigraph(format_bigraph(g)) == g

    def test_matrix(self):
        assert parse_matrix("1,-2\n3,4\n") == [[1, -2], [3, 4]]
        with pytest.raises(ParseError):
            parse_matrix("1,2\n3\n")
        with pytest.raises(ParseError):
            parse_matrix("1,a\n3,4\n")

    def test_cnf_round_trip(self):
        rng = random.Random(2)
        for _ in range(30):
            f = random_restricted_2cnf(rng)
            assert parse_cnf(format_cnf(f)) == f

    def test_monomial(self):
        assert parse_monomial("x1*x3") == 0b101
        assert parse_monomial("1") == 0
        with pytest.raises(ParseError):
            parse_monomial("x1*x1")
        with pytest.raises(ParseError):
            parse_monomial("x0")

    def test_table_order(self):
        t = MultilinearTable(3, {0b110: 4, 0b001: 2, 0b011: -1, 0: 7})
        assert format_table(t) == "() 7\nx1 2\nx1,x2 -1\nx2,x3 4\n"
