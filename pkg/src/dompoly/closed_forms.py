"""Closed-form domination polynomials for the families that have one."""

from __future__ import annotations

from dompoly.families import FamilyError, FamilySpec
from dompoly.polynomial import ONE, DomPolynomial, binomial_power


class UnsupportedFamily(FamilyError):
    """No closed form is available for this family."""


def complete_poly(n: int) -> DomPolynomial:
    """(1 + x)^n - 1: every nonempty subset of K_n dominates."""
    return binomial_power(n) - ONE


def cocktail_party_poly(n: int) -> DomPolynomial:
    """(1 + x)^(2n) - 2nx - 1."""
    return binomial_power(2 * n) - DomPolynomial([1, 2 * n])


def book_poly(n: int) -> DomPolynomial:
    """(x^2 + 2x)^n (2x + 1) + x^2 (x + 1)^(2n) - 2x^n."""
    return (
        DomPolynomial([0, 2, 1]) ** n * DomPolynomial([1, 2])
        + binomial_power(2 * n).scale_by_x(2)
        - DomPolynomial.monomial(n, 2)
    )


def book_complement_poly(n: int) -> DomPolynomial:
    """((1 + x)^(n+1) - 1)^2."""
    return complete_poly(n + 1) ** 2


def barbell_poly(n: int) -> DomPolynomial:
    """((1 + x)^n - 1)^2, also for every generalized barbell Bar_{n,t}."""
    return complete_poly(n) ** 2


def clique_chain_poly(sizes) -> DomPolynomial:
    """Product of (1 + x)^{n_i} - 1 over the cliques."""
    out = ONE
    for s in sizes:
        out = out * complete_poly(s)
    return out


def closed_form(spec: FamilySpec) -> DomPolynomial:
    """Exact closed form for ``spec``; raises :class:`UnsupportedFamily` otherwise.

    Only the order parameters are checked here (same lower bounds as the
    constructors); cross-edge sets do not enter the formula.
    """
    k, p = spec.kind, spec.params
    if k == "complete":
        _at_least(p[0], 1, k)
        return complete_poly(p[0])
    if k == "cocktail_party":
        _at_least(p[0], 1, k)
        return cocktail_party_poly(p[0])
    if k == "book":
        _at_least(p[0], 1, k)
        return book_poly(p[0])
    if k == "book_complement":
        _at_least(p[0], 1, k)
        return book_complement_poly(p[0])
    if k == "barbell":
        _at_least(p[0], 2, k)
        return barbell_poly(p[0])
    if k == "generalized_barbell":
        _at_least(p[0], 3, k)
        return barbell_poly(p[0])
    if k in ("clique_chain", "generalized_clique_chain"):
        if len(p) < 2:
            raise FamilyError("a chain needs at least two cliques")
        for s in p:
            _at_least(s, 3, k)
        return clique_chain_poly(p)
    if k == "union":
        out = ONE
        for part in spec.parts:
            out = out * closed_form(part)
        return out
    raise UnsupportedFamily(f"no closed form for family kind {k!r}")


def _at_least(value: int, bound: int, kind: str) -> None:
    if value < bound:
        raise FamilyError(f"{kind} needs parameter >= {bound}, got {value}")


__all__ = [
    "UnsupportedFamily",
    "closed_form",
    "complete_poly",
    "cocktail_party_poly",
    "book_poly",
    "book_complement_poly",
    "barbell_poly",
    "clique_chain_poly",
]
