import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mlmkit import MultilinearTable, ShapeError, Term, clause_to_table, table_add, table_mul, varset
from oracles import poly_mul_filter

X0, X1, X2 = 1, 2, 4


def T(entries, n=3):
    return MultilinearTable(n, entries)


def assert_canonical(t):
    assert all(v != 0 for v in t.values())


def test_varset_roundtrip():
    assert varset([0, 2]) == 0b101
    assert T({(0, 2): 5})[{0, 2}] == 5


class TestTableAdd:
    def test_identity(self):
        assert table_add(T({}), T({X0: 3})) == T({X0: 3})

    def test_cancellation(self):
        out = table_add(T({X0: 2}), T({X0: -2}))
        assert out == T({}) and len(out) == 0

    def test_mixed(self):
        a = {X0: 2, X1: 1}
        b = {X1: 4, X0 | X1: 7}
        expected = {X0: 2, X1: 5, X0 | X1: 7}
        summed = {k: a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)}
        assert expected == {k: v for k, v in summed.items() if v}
        assert table_add(T(a), T(b)) == T(expected)

    def test_mismatched_universe(self):
        with pytest.raises(ShapeError):
            table_add(T({}, 2), T({}, 3))


class TestTableMul:
    def test_identity(self):
        b = T({X0: 3, X1 | X2: -1})
        assert table_mul(T({0: 1}), b) == b

    def test_square_discarded(self):
        assert table_mul(T({X0: 1}), T({X0: 1})) == T({})

    def test_mixed(self):
        a, b = {X0: 2, X1: 3}, {X1: 5, 0: 1}
        expected = poly_mul_filter(a, b)
        assert expected == {X0: 2, X1: 3, X0 | X1: 10}
        assert table_mul(T(a), T(b)) == T(expected)

    def test_mismatched_universe(self):
        with pytest.raises(ShapeError):
            table_mul(T({}, 2), T({}, 3))


class TestClauseToTable:
    def test_transcription(self):
        assert clause_to_table((Term.of(0, 1), Term.of(2)), 3) == T({X0 | X1: 1, X2: 1})

    def test_square_dropped(self):
        assert clause_to_table((Term.of(0, 0), Term.of(1)), 3) == T({X1: 1})

    def test_merges_equal_supports(self):
        c = (Term.of(0, 1, coefficient=2), Term.of(1, 0, coefficient=3))
        assert clause_to_table(c, 3) == T({X0 | X1: 5})


def test_term_properties():
    t = Term(((2, 1), (0, 3), (2, 1)), 4)
    assert t.exponents == ((0, 3), (2, 2))
    assert t.degree == 5
    assert not t.is_multilinear
    assert t.length == pytest.approx(2 + 1.584962500721156)
    assert Term.of(1, 4).length == 2
    with pytest.raises(ShapeError):
        Term(((0, 0),))


N = 6
tables = st.dictionaries(
    st.integers(0, (1 << N) - 1), st.integers(-5, 5), max_size=12
).map(lambda d: MultilinearTable(N, d))


@settings(max_examples=150, deadline=None)
@given(tables, tables, tables)
def test_algebra_laws(a, b, c):
    assert table_mul(a, b) == table_mul(b, a)
    assert table_add(a, b) == table_add(b, a)
    assert table_add(table_add(a, b), c) == table_add(a, table_add(b, c))
    assert table_mul(a, table_add(b, c)) == table_add(table_mul(a, b), table_mul(a, c))
    for out in (table_mul(a, b), table_add(a, b)):
        assert_canonical(out)


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 10).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.dictionaries(st.integers(0, (1 << n) - 1), st.integers(-4, 4), max_size=10),
            st.dictionaries(st.integers(0, (1 << n) - 1), st.integers(-4, 4), max_size=10),
        )
    )
)
def test_mul_matches_full_expansion(case):
    n, a, b = case
    got = table_mul(MultilinearTable(n, a), MultilinearTable(n, b))
    a = {k: v for k, v in a.items() if v}
    b = {k: v for k, v in b.items() if v}
    assert got == MultilinearTable(n, poly_mul_filter(a, b))
