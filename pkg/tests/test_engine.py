import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_counts
from dompoly import engine
from dompoly import families as fam
from dompoly.closed_forms import barbell_poly, book_complement_poly
from dompoly.engine import (
    EnumerationLimitError,
    dominating_set_counts,
    domination_number,
    domination_polynomial,
    irrelevant_edges,
    is_domination_covered,
    is_dominating,
    is_irrelevant_edge,
    oracle_domination_covered,
    p_u,
    recurrence_rhs,
)
from dompoly.graph import GraphError, delete_edge, delete_vertex, disjoint_union, empty_graph, from_edges
from dompoly.polynomial import DomPolynomial


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, k in zip(pairs, keep) if k])


K3 = fam.complete(3)
P3 = fam.path(3)
P4 = fam.path(4)
C4 = fam.cycle(4)


def test_is_dominating():
    assert is_dominating(K3, [0])
    assert is_dominating(P4, [1, 2])
    assert not is_dominating(P4, [0, 1])
    assert is_dominating(empty_graph(0), [])


def test_counts_examples():
    assert dominating_set_counts(P4).counts == (0, 0, 4, 4, 1)
    assert dominating_set_counts(C4).counts == (0, 0, 6, 4, 1)
    assert dominating_set_counts(K3).counts == (0, 3, 3, 1)
    assert dominating_set_counts(P4).counts == tuple(barbell_poly(2).padded(5))


def test_polynomial_examples():
    bar3 = domination_polynomial(fam.barbell(3))
    assert bar3 == DomPolynomial([0, 0, 9, 18, 15, 6, 1])
    assert domination_polynomial(disjoint_union(K3, K3)) == bar3
    assert domination_polynomial(empty_graph(0)) == DomPolynomial([1])


def test_isolated_vertices_are_forced():
    g = from_edges(4, [(0, 1), (1, 2)])  # vertex 3 isolated
    counts = dominating_set_counts(g).counts
    assert counts == tuple(brute_counts(g))
    # every dominating set contains 3, so D(g) = x * D(P_3)
    assert domination_polynomial(g) == domination_polynomial(P3).scale_by_x()
    assert domination_polynomial(empty_graph(5)) == DomPolynomial.monomial(5)


@pytest.mark.parametrize("method", ["recursive", "vectorized"])
def test_routes_match_brute_force(method):
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(0, 10)
        g = from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < rng.random()])
        assert list(dominating_set_counts(g, method=method).counts) == brute_counts(g)


def test_vectorized_prefix_loop(monkeypatch):
    # force the split between array part and Python prefixes on small graphs
    monkeypatch.setattr(engine, "VEC_LOW_BITS", 3)
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(4, 9)
        g = from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.4])
        assert list(dominating_set_counts(g, method="vectorized").counts) == brute_counts(g)


def test_routes_agree_on_larger_graphs():
    rng = random.Random(2)
    for n, p in [(17, 0.3), (20, 0.2), (22, 0.5), (23, 0.1)]:
        g = from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        a = dominating_set_counts(g, method="recursive")
        b = dominating_set_counts(g, method="vectorized")
        assert a == b


def test_guard():
    big = fam.path(31)
    with pytest.raises(EnumerationLimitError):
        dominating_set_counts(big)
    with pytest.raises(EnumerationLimitError):
        dominating_set_counts(fam.path(8), max_n=5)
    # lifting the guard: dense graphs stay cheap on the recursive route
    counts = dominating_set_counts(fam.complete(40), max_n=40, method="recursive").counts
    assert list(counts) == [0] + [comb(40, i) for i in range(1, 41)]


def test_unknown_method():
    with pytest.raises(ValueError):
        dominating_set_counts(K3, method="magic")


def test_domination_number():
    assert domination_number(fam.complete(5)) == 1
    assert domination_number(fam.barbell(3)) == 2
    assert domination_number(C4) == 2
    assert domination_number(empty_graph(0)) == 0
    rng = random.Random(4)
    for _ in range(50):
        n = rng.randint(1, 9)
        g = from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.3])
        assert domination_number(g) == dominating_set_counts(g).domination_number


def p_u_oracle(g, u):
    h = delete_vertex(g, u)
    old = [v for v in range(g.n) if v != u]
    counts = [0] * (h.n + 1)
    for k in range(h.n + 1):
        for s in combinations(range(h.n), k):
            if any(g.has_edge(u, old[w]) for w in s):
                continue
            if is_dominating(h, s):
                counts[k] += 1
    return DomPolynomial(counts)


def test_p_u_examples():
    assert p_u(P3, 1) == DomPolynomial()
    assert p_u(P3, 0) == DomPolynomial([0, 1])
    for n in range(1, 6):
        for u in range(n):
            assert p_u(fam.complete(n), u) == (DomPolynomial([1]) if n == 1 else DomPolynomial())


@given(graphs(7), st.data())
def test_p_u_matches_oracle(g, data):
    if g.n == 0:
        return
    u = data.draw(st.integers(0, g.n - 1))
    assert p_u(g, u) == p_u_oracle(g, u)


def test_recurrence_examples():
    assert recurrence_rhs(P3, 0) == DomPolynomial([0, 1, 3, 1]) == domination_polynomial(P3)
    assert recurrence_rhs(fam.complete(1), 0) == DomPolynomial([0, 1])
    for n in (1, 2, 3):
        g = fam.book_complement(n)
        assert recurrence_rhs(g, 2 * n + 1) == book_complement_poly(n)


@settings(max_examples=150)
@given(graphs(8), st.data())
def test_recurrence_identity(g, data):
    if g.n == 0:
        return
    u = data.draw(st.integers(0, g.n - 1))
    d = domination_polynomial(g)
    assert recurrence_rhs(g, u) == d
    assert recurrence_rhs(g, u, memo=True) == d


def test_covered_examples():
    star = fam.star(3)
    for v in range(3):
        assert is_domination_covered(K3, v)
    assert not is_domination_covered(star, 1)
    assert is_domination_covered(star, 0)
    for v in (0, 1):
        assert is_domination_covered(star, v) == oracle_domination_covered(star, v)
    for v in range(3):
        assert oracle_domination_covered(K3, v)


def test_covered_isolated_vertex():
    g = from_edges(3, [(0, 1)])
    assert not is_domination_covered(g, 2)
    assert not oracle_domination_covered(g, 2)
    assert not is_domination_covered(fam.complete(1), 0)
    assert not oracle_domination_covered(fam.complete(1), 0)


@settings(max_examples=150)
@given(graphs(8), st.data())
def test_covered_matches_definition(g, data):
    if g.n == 0:
        return
    v = data.draw(st.integers(0, g.n - 1))
    assert is_domination_covered(g, v) == oracle_domination_covered(g, v)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_barbell_bridge_irrelevant(n):
    assert is_irrelevant_edge(fam.barbell(n), (n - 1, 2 * n - 1))


def test_relevant_edges():
    for e in C4.edges():
        assert not is_irrelevant_edge(C4, e)
    for e in K3.edges():
        assert not is_irrelevant_edge(K3, e)
    with pytest.raises(GraphError):
        is_irrelevant_edge(K3, (0, 0))


def test_irrelevant_edge_lists():
    assert irrelevant_edges(fam.barbell(3), check=True) == [(2, 5)]
    assert irrelevant_edges(fam.complete(4), check=True) == []
    assert irrelevant_edges(fam.clique_chain([3, 3, 3]), check=True) == [(0, 3), (4, 6)]


@settings(max_examples=100)
@given(graphs(8))
def test_irrelevant_matches_polynomial_equality(g):
    d = domination_polynomial(g)
    for e in g.edges():
        assert is_irrelevant_edge(g, e) == (domination_polynomial(delete_edge(g, e)) == d)


@settings(max_examples=100)
@given(graphs(6), graphs(6))
def test_multiplicative_over_unions(g, h):
    assert domination_polynomial(disjoint_union(g, h)) == domination_polynomial(g) * domination_polynomial(h)


@given(graphs(9))
def test_count_bounds(g):
    d = dominating_set_counts(g).counts
    n = g.n
    assert d[n] == 1
    assert n == 0 or d[0] == 0
    for i in range(n + 1):
        assert 0 <= d[i] <= comb(n, i)
    for i in range(n):
        assert d[i + 1] * (i + 1) >= d[i] * (n - i)
