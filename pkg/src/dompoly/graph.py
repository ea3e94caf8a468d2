"""Simple undirected graphs stored as per-vertex neighbour bit masks.

Vertex ``v`` of a graph on ``n`` vertices is bit ``1 << v``.  A vertex set is
either an iterable of indices or an ``int`` mask; helpers below convert.
Graphs are immutable; every operation returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

# Single-word masks cover every desk-scale experiment.  Python ints are
# unbounded, so larger graphs work once the guard is lifted explicitly.
MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graphs and out-of-range vertices or edges."""


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``masks[v]`` is the open neighbourhood N(v) as a bit mask.  Two graphs
    compare equal iff they have identical adjacency under the same labels.
    """

    n: int
    masks: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.masks) != self.n:
            raise GraphError(f"expected {self.n} adjacency masks, got {len(self.masks)}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(members(m)) for m in self.masks)

    def neighbors(self, v: int) -> frozenset[int]:
        _check_vertex(self, v)
        return frozenset(members(self.masks[v]))

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.masks[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in members(self.masks[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(self.degrees()) // 2

    def validate(self) -> None:
        """Check symmetry, loop-freeness and index range over all pairs."""
        full = self.full_mask
        for v, mask in enumerate(self.masks):
            if mask & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in members(mask):
                if not self.masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < g.n:
        raise GraphError(f"vertex {v!r} out of range for graph of order {g.n}")


def _check_order(n: int, allow_large: bool) -> None:
    if n > MAX_ORDER and not allow_large:
        raise GraphError(f"order {n} exceeds {MAX_ORDER}; pass allow_large=True to override")


def empty_graph(n: int = 0, allow_large: bool = False) -> Graph:
    """The edgeless graph on ``n`` vertices (``n = 0`` is the null graph)."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    _check_order(n, allow_large)
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[Sequence[int]], allow_large: bool = False) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    _check_order(n, allow_large)
    masks = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v}) rejected")
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph(n, tuple(masks))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    _check_vertex(g, v)
    return frozenset(members(g.closed_mask(v)))


def induced_subgraph(g: Graph, keep: int) -> Graph:
    """Subgraph induced on the vertex mask ``keep``, relabelled in order."""
    kept = members(keep & g.full_mask)
    index = {v: i for i, v in enumerate(kept)}
    masks = []
    for v in kept:
        masks.append(mask_of(index[u] for u in members(g.masks[v] & keep)))
    return Graph(len(kept), tuple(masks))


def delete_vertex(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    """G - N[v]; may be the null graph."""
    _check_vertex(g, v)
    return induced_subgraph(g, g.full_mask & ~g.closed_mask(v))


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, tuple(masks))


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = e
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError(f"self-loop ({u}, {v}) rejected")
    masks = list(g.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph(g.n, tuple(masks))


def contract_vertex(g: Graph, u: int) -> Graph:
    """G/u: make N(u) a clique, then delete u."""
    _check_vertex(g, u)
    nbrs = g.masks[u]
    masks = list(g.masks)
    for w in members(nbrs):
        masks[w] |= nbrs & ~(1 << w)
    return delete_vertex(Graph(g.n, tuple(masks)), u)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks)))


def disjoint_union(g: Graph, h: Graph, allow_large: bool = False) -> Graph:
    """G followed by H, with H's labels shifted up by ``g.n``."""
    _check_order(g.n + h.n, allow_large)
    return Graph(g.n + h.n, g.masks + tuple(m << g.n for m in h.masks))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the bijection ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of the vertices")
    masks = [0] * g.n
    for v, m in enumerate(g.masks):
        masks[perm[v]] = mask_of(perm[u] for u in members(m))
    return Graph(g.n, tuple(masks))
