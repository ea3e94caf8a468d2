"""Dominating-set enumeration, the vertex recurrence and covered/irrelevant tests.

Two enumeration routes share one contract (exact counts per cardinality):

* ``recursive``: include/exclude recursion over the vertices, carrying the
  coverage mask.  A branch dies as soon as some vertex can no longer be
  covered, and once everything is covered the undecided vertices are
  free, so their contribution is added as a binomial row in one step.
* ``vectorized``: the subsets of the first ``VEC_LOW_BITS`` branching
  vertices are laid out in a numpy array by doubling (``cov[S + v] =
  cov[S] | N[v]``); the remaining vertices are iterated in Python and
  each prefix is OR-ed onto the whole array at once.

``auto`` picks ``vectorized`` for ``VEC_THRESHOLD < a <= VEC_MAX`` branching
vertices.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from dompoly.graph import (
    Graph,
    _check_vertex,
    contract_vertex,
    delete_closed_neighborhood,
    delete_edge,
    delete_vertex,
    mask_of,
    members,
)
from dompoly.polynomial import ONE, X, DomPolynomial

DEFAULT_MAX_N = 30
VEC_THRESHOLD = 16
VEC_LOW_BITS = 20
# beyond this the Python prefix loop dominates; the pruned recursion wins on dense graphs
VEC_MAX = 34


class EnumerationLimitError(ValueError):
    """The graph is larger than the enumeration guard allows."""


def _guard(n: int, max_n: int | None) -> None:
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n > limit:
        raise EnumerationLimitError(
            f"order {n} exceeds the enumeration guard {limit}; raise max_n to override"
        )


@dataclass(frozen=True)
class DomCount:
    """Number of dominating sets of each size 0..n."""

    n: int
    counts: tuple[int, ...]

    @property
    def domination_number(self) -> int:
        for i, c in enumerate(self.counts):
            if c:
                return i
        raise AssertionError("every graph has a dominating set")

    def polynomial(self) -> DomPolynomial:
        return DomPolynomial(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]


def is_dominating(g: Graph, s) -> bool:
    """True iff N[S] = V.  ``s`` is an iterable of vertices."""
    covered = 0
    for v in s:
        _check_vertex(g, v)
        covered |= g.closed_mask(v)
    return covered == g.full_mask


def _count_recursive(closed: list[int], target: int, order: list[int]) -> list[int]:
    """Counts by subset size over subsets of ``order`` whose closed masks cover ``target``."""
    a = len(order)
    pos = {v: k for k, v in enumerate(order)}
    # last[k]: target vertices whose final chance of being covered is order[k]
    last = [0] * a
    for w in members(target):
        chances = [pos[u] for u in members(closed[w]) if u in pos]
        if not chances:
            return [0] * (a + 1)
        last[max(chances)] |= 1 << w
    steps = [(closed[v], last[k]) for k, v in enumerate(order)]
    tally: Counter = Counter()

    def walk(k: int, cov: int, size: int) -> None:
        if cov & target == target:
            tally[size, a - k] += 1
            return
        cm, need = steps[k]
        inc = cov | cm
        if inc & need == need:
            walk(k + 1, inc, size + 1)
        if cov & need == need:
            walk(k + 1, cov, size)

    walk(0, 0, 0)
    out = [0] * (a + 1)
    for (size, free), mult in tally.items():
        for j in range(free + 1):
            out[size + j] += mult * comb(free, j)
    return out


def _count_vectorized(closed: list[int], target: int, order: list[int]) -> list[int]:
    a = len(order)
    low, high = order[:VEC_LOW_BITS], order[VEC_LOW_BITS:]
    cov = np.zeros(1, dtype=np.uint64)
    size = np.zeros(1, dtype=np.uint8)
    for v in low:
        cov = np.concatenate((cov, cov | np.uint64(closed[v])))
        size = np.concatenate((size, size + np.uint8(1)))
    t = np.uint64(target)
    cov &= t
    out = np.zeros(a + 1, dtype=np.int64)
    prefixes = [(0, 0)]
    for v in high:
        prefixes += [(c | closed[v], s + 1) for c, s in prefixes]
    width = len(low) + 1
    for pcov, psize in prefixes:
        pc = np.uint64(pcov & target)
        hit = (cov | pc) == t
        out[psize:psize + width] += np.bincount(size[hit], minlength=width)
    return [int(c) for c in out]


def _count(closed: list[int], target: int, order: list[int], method: str) -> list[int]:
    if method == "auto":
        vec = VEC_THRESHOLD < len(order) <= VEC_MAX and target.bit_length() <= 64
        method = "vectorized" if vec else "recursive"
    if method == "recursive":
        return _count_recursive(closed, target, order)
    if method == "vectorized":
        if target.bit_length() > 64 or any(c.bit_length() > 64 for c in closed):
            raise EnumerationLimitError("vectorized route needs order <= 64")
        return _count_vectorized(closed, target, order)
    raise ValueError(f"unknown method {method!r}")


def dominating_set_counts(g: Graph, max_n: int | None = None, method: str = "auto") -> DomCount:
    _guard(g.n, max_n)
    closed = [g.closed_mask(v) for v in range(g.n)]
    counts = _count(closed, g.full_mask, list(range(g.n)), method)
    return DomCount(g.n, tuple(counts))


def domination_polynomial(g: Graph, max_n: int | None = None, method: str = "auto") -> DomPolynomial:
    """D(G, x); the null graph gives the constant 1."""
    return dominating_set_counts(g, max_n, method).polynomial()


def domination_number(g: Graph, max_n: int | None = None) -> int:
    """Smallest dominating set size, searching sizes upward.

    The null graph returns 0 (its empty set dominates).
    """
    _guard(g.n, max_n)
    closed = [g.closed_mask(v) for v in range(g.n)]
    full = g.full_mask
    for k in range(g.n + 1):
        for combo in itertools.combinations(closed, k):
            cov = 0
            for c in combo:
                cov |= c
            if cov == full:
                return k
    raise AssertionError("unreachable")


def p_u(g: Graph, u: int, max_n: int | None = None) -> DomPolynomial:
    """Generating polynomial of the dominating sets of G - u that avoid N(u)."""
    _check_vertex(g, u)
    _guard(g.n, max_n)
    h = delete_vertex(g, u)
    # G - u relabels v > u to v - 1
    shift = [v if v < u else v - 1 for v in range(g.n)]
    forbidden = mask_of(shift[w] for w in members(g.masks[u]))
    allowed = [v for v in range(h.n) if not forbidden >> v & 1]
    closed = [h.closed_mask(v) for v in range(h.n)]
    return DomPolynomial(_count(closed, h.full_mask, allowed, "auto"))


@lru_cache(maxsize=None)
def _memo_poly(n: int, masks: tuple[int, ...]) -> DomPolynomial:
    return domination_polynomial(Graph(n, masks), max_n=n)


def recurrence_rhs(g: Graph, u: int, max_n: int | None = None, memo: bool = False) -> DomPolynomial:
    """x D(G/u) + D(G - u) + x D(G - N[u]) - (1 + x) p_u(G), each term enumerated."""
    _check_vertex(g, u)
    _guard(g.n, max_n)
    if memo:
        def poly(h):
            return _memo_poly(h.n, h.masks)
    else:
        def poly(h):
            return domination_polynomial(h, max_n=max_n)
    return (
        poly(contract_vertex(g, u)).scale_by_x()
        + poly(delete_vertex(g, u))
        + poly(delete_closed_neighborhood(g, u)).scale_by_x()
        - (ONE + X) * p_u(g, u, max_n)
    )


def is_domination_covered(g: Graph, v: int) -> bool:
    """Some proper neighbour u of v has N[u] contained in N[v]."""
    _check_vertex(g, v)
    nv = g.closed_mask(v)
    return any(g.closed_mask(u) & ~nv == 0 for u in members(g.masks[v]))


def oracle_domination_covered(g: Graph, v: int, max_n: int | None = None) -> bool:
    """Every dominating set of G - v contains a G-neighbour of v (by enumeration)."""
    _check_vertex(g, v)
    _guard(g.n, max_n)
    rest = g.full_mask & ~(1 << v)
    verts = members(rest)
    closed = {w: g.closed_mask(w) & rest for w in verts}
    nbrs = g.masks[v]
    for k in range(len(verts) + 1):
        for combo in itertools.combinations(verts, k):
            cov = 0
            for w in combo:
                cov |= closed[w]
            if cov == rest and not mask_of(combo) & nbrs:
                return False
    return True


def is_irrelevant_edge(g: Graph, e) -> bool:
    """Both endpoints of e are domination-covered in G - e."""
    u, v = e
    h = delete_edge(g, (u, v))
    return is_domination_covered(h, u) and is_domination_covered(h, v)


def irrelevant_edges(g: Graph, check: bool = False, max_n: int | None = None) -> list[tuple[int, int]]:
    """All irrelevant edges in lexicographic order.

    With ``check`` each verdict is compared against D(G) = D(G - e) by
    enumeration, raising ``AssertionError`` on disagreement.
    """
    base = domination_polynomial(g, max_n) if check else None
    out = []
    for e in g.edges():
        verdict = is_irrelevant_edge(g, e)
        if check and verdict != (domination_polynomial(delete_edge(g, e), max_n) == base):
            raise AssertionError(f"covered-vertex test disagrees with enumeration at edge {e}")
        if verdict:
            out.append(e)
    return out

