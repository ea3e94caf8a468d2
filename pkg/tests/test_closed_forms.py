from itertools import combinations, product

import pytest
import sympy

from dompoly import families as fam
from dompoly.closed_forms import (
    UnsupportedFamily,
    barbell_poly,
    book_complement_poly,
    book_poly,
    closed_form,
    cocktail_party_poly,
    complete_poly,
)
from dompoly.engine import domination_polynomial
from dompoly.families import FamilySpec
from dompoly.formats import parse_family
from dompoly.polynomial import DomPolynomial

x = sympy.Symbol("x")


def expand(expr) -> DomPolynomial:
    poly = sympy.Poly(sympy.expand(expr), x)
    return DomPolynomial(int(c) for c in reversed(poly.all_coeffs()))


@pytest.mark.parametrize("n", range(1, 12))
def test_formulas_against_symbolic_expansion(n):
    assert book_poly(n) == expand((x**2 + 2 * x) ** n * (2 * x + 1) + x**2 * (x + 1) ** (2 * n) - 2 * x**n)
    assert cocktail_party_poly(n) == expand((1 + x) ** (2 * n) - 2 * n * x - 1)
    assert book_complement_poly(n) == expand(((1 + x) ** (n + 1) - 1) ** 2)
    assert barbell_poly(n) == expand(((1 + x) ** n - 1) ** 2)


def test_frozen_values():
    assert closed_form(FamilySpec("book", (1,))) == DomPolynomial([0, 0, 6, 4, 1])
    assert closed_form(FamilySpec("book", (2,))) == DomPolynomial([0, 0, 3, 16, 15, 6, 1])
    assert closed_form(FamilySpec("cocktail_party", (3,))) == DomPolynomial([0, 0, 15, 20, 15, 6, 1])
    assert closed_form(FamilySpec("barbell", (4,))) == DomPolynomial([0, 0, 16, 48, 68, 56, 28, 8, 1])
    assert closed_form(FamilySpec("book_complement", (2,))) == DomPolynomial([0, 0, 9, 18, 15, 6, 1])
    assert closed_form(FamilySpec("clique_chain", (3, 3, 3))) == complete_poly(3) ** 3


@pytest.mark.parametrize(
    "text",
    [f"K:{n}" for n in range(1, 9)]
    + [f"cp:{n}" for n in range(1, 5)]
    + [f"book:{n}" for n in range(1, 5)]
    + [f"book_c:{n}" for n in range(1, 5)]
    + [f"barbell:{n}" for n in range(2, 6)]
    + ["genbarbell:3:0-0,1-1", "genbarbell:4:t=5", "chain:K3,K4", "chain:K3,K3,K4:t=2",
       "genchain:3,4,3:0-0,1-2/2-1", "K:3+K:3", "barbell:3+cp:2"],
)
def test_closed_form_matches_enumeration(text):
    spec = parse_family(text)
    g = spec.build()
    assert g.n <= 10
    assert closed_form(spec) == domination_polynomial(g)


def test_union_is_product():
    parts = (FamilySpec("complete", (2,)), FamilySpec("book", (2,)), FamilySpec("barbell", (3,)))
    union = FamilySpec("union", parts=parts)
    expected = DomPolynomial([1])
    for p in parts:
        expected = expected * closed_form(p)
    assert closed_form(union) == expected


def test_all_small_chains():
    for k in (2, 3):
        for sizes in product((3, 4), repeat=k):
            assert closed_form(FamilySpec("clique_chain", sizes)) == domination_polynomial(fam.clique_chain(sizes))


def test_large_orders_stay_exact():
    p = closed_form(FamilySpec("barbell", (200,)))
    assert p.degree == 400
    assert p[400] == 1
    assert p(1) == (2**200 - 1) ** 2


@pytest.mark.parametrize("spec", [FamilySpec("path", (4,)), FamilySpec("cycle", (5,)), FamilySpec("star", (3,))])
def test_unsupported(spec):
    with pytest.raises(UnsupportedFamily):
        closed_form(spec)


def test_generalized_barbell_all_cross_sets_n3():
    target = barbell_poly(3)
    pairs = fam.admissible_pairs(3, 3)
    for t in range(1, 5):
        for chosen in combinations(pairs, t):
            spec = FamilySpec("generalized_barbell", (3,), cross_edges=chosen)
            assert closed_form(spec) == target == domination_polynomial(spec.build())
