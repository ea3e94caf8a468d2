"""Exact domination polynomials of small simple graphs."""

from dompoly.graph import Graph, from_edges
from dompoly.polynomial import DomPolynomial
from dompoly.engine import domination_polynomial, dominating_set_counts

__all__ = [
    "Graph",
    "from_edges",
    "DomPolynomial",
    "domination_polynomial",
    "dominating_set_counts",
]
