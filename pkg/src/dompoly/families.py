"""Constructors for the named graph families.

Canonical labelings (fixed so regression baselines are byte-identical):

* ``complete(n)``, ``path(n)``, ``cycle(n)``: 0..n-1 in the obvious order.
* ``star(m)``: centre 0, leaves 1..m.
* ``complete_multipartite(sizes)``: parts consecutively, part 0 first.
* ``cocktail_party(t)``: the non-adjacent pairs are ``(2i, 2i+1)``.
* ``book(n)`` and ``book_complement(n)``: page ``i`` is ``a_i = 2i``,
  ``b_i = 2i+1``; the hubs come last, ``u = 2n`` (adjacent to every
  ``a_i`` in the book) and ``v = 2n+1`` (adjacent to every ``b_i``).
* Barbells and clique chains are block-major: block ``i`` occupies a
  consecutive index range.  The last vertex of each block is reserved in
  the generalized families and never carries an inter-block edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from dompoly.graph import Graph, GraphError, add_edge, disjoint_union, empty_graph, from_edges

KINDS = (
    "complete",
    "complete_multipartite",
    "path",
    "cycle",
    "star",
    "cocktail_party",
    "book",
    "book_complement",
    "barbell",
    "generalized_barbell",
    "clique_chain",
    "generalized_clique_chain",
    "chain_of_graphs",
    "union",
)


class FamilyError(GraphError):
    """Family parameters outside the constructor's validity bounds."""


def complete(n: int) -> Graph:
    if n < 1:
        raise FamilyError("complete graph needs n >= 1 (use empty_graph(0) for the null graph)")
    return from_edges(n, combinations(range(n), 2))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    if not part_sizes:
        raise FamilyError("at least one part is required")
    if any(s < 1 for s in part_sizes):
        raise FamilyError("part sizes must be positive")
    part = [i for i, s in enumerate(part_sizes) for _ in range(s)]
    n = len(part)
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def turan(n: int, r: int) -> Graph:
    """T(n, r): n vertices in r parts of sizes as equal as possible."""
    if r < 1 or n < r:
        raise FamilyError("Turan graph needs 1 <= r <= n")
    q, extra = divmod(n, r)
    return complete_multipartite([q + 1] * extra + [q] * (r - extra))


def path(n: int) -> Graph:
    if n < 1:
        raise FamilyError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(m: int) -> Graph:
    """K_{1,m}."""
    if m < 1:
        raise FamilyError("star needs m >= 1 leaves")
    return from_edges(m + 1, [(0, i) for i in range(1, m + 1)])


def cocktail_party(t: int) -> Graph:
    if t < 1:
        raise FamilyError("cocktail party graph needs t >= 1")
    n = 2 * t
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if u // 2 != v // 2])


def book(n: int) -> Graph:
    if n < 1:
        raise FamilyError("book graph needs n >= 1 pages")
    u, v = 2 * n, 2 * n + 1
    edges = [(u, v)]
    for i in range(n):
        a, b = 2 * i, 2 * i + 1
        edges += [(u, a), (a, b), (b, v)]
    return from_edges(2 * n + 2, edges)


def book_complement(n: int) -> Graph:
    """Complement of ``book(n)``, built directly from its two cliques.

    Cliques {a_1..a_n, v} and {b_1..b_n, u}, plus a_i b_j for i != j.
    """
    if n < 1:
        raise FamilyError("book graph needs n >= 1 pages")
    u, v = 2 * n, 2 * n + 1
    a_side = [2 * i for i in range(n)] + [v]
    b_side = [2 * i + 1 for i in range(n)] + [u]
    edges = list(combinations(a_side, 2)) + list(combinations(b_side, 2))
    edges += [(2 * i, 2 * j + 1) for i in range(n) for j in range(n) if i != j]
    return from_edges(2 * n + 2, edges)


def barbell(n: int) -> Graph:
    """Two K_n on 0..n-1 and n..2n-1, bridged between n-1 and 2n-1."""
    if n < 2:
        raise FamilyError("barbell needs n >= 2")
    g = disjoint_union(complete(n), complete(n))
    return add_edge(g, (n - 1, 2 * n - 1))


def admissible_pairs(n1: int, n2: int) -> list[tuple[int, int]]:
    """Cross pairs between two cliques avoiding both reserved last vertices."""
    return list(product(range(n1 - 1), range(n2 - 1)))


def _check_cross(pairs, n1: int, n2: int) -> list[tuple[int, int]]:
    pairs = [tuple(p) for p in pairs]
    if len(set(pairs)) != len(pairs):
        raise FamilyError(f"duplicate cross pair in {pairs}")
    if not 1 <= len(pairs) <= (n1 - 1) * (n2 - 1):
        raise FamilyError(f"need 1..{(n1 - 1) * (n2 - 1)} cross pairs, got {len(pairs)}")
    for i, j in pairs:
        if not (0 <= i < n1 and 0 <= j < n2):
            raise FamilyError(f"cross pair ({i}, {j}) out of range")
        if i == n1 - 1 or j == n2 - 1:
            raise FamilyError(f"cross pair ({i}, {j}) uses a reserved vertex")
    return pairs


def generalized_barbell(n: int, cross_pairs: Sequence[Sequence[int]]) -> Graph:
    """Bar_{n,t}: two K_n plus the given cross edges u_i v_j (i, j <= n-2)."""
    if n < 3:
        raise FamilyError("generalized barbell needs n >= 3")
    return generalized_clique_chain([n, n], [cross_pairs])


def default_cross_pairs(n1: int, n2: int, t: int) -> list[tuple[int, int]]:
    """Lexicographically first ``t`` admissible pairs (CLI convenience)."""
    pairs = admissible_pairs(n1, n2)
    if not 1 <= t <= len(pairs):
        raise FamilyError(f"t must lie in 1..{len(pairs)}")
    return pairs[:t]


def _offsets(sizes: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for s in sizes:
        out.append(acc)
        acc += s
    return out


def generalized_clique_chain(sizes: Sequence[int], cross_edge_sets: Sequence[Sequence[Sequence[int]]]) -> Graph:
    """Cliques K_{n_1}, ..., K_{n_k} in a row, consecutive ones joined by the
    given pairs ``(a, b)``: local vertex a of clique i to local b of clique i+1.
    """
    k = len(sizes)
    if k < 2:
        raise FamilyError("a chain needs at least two cliques")
    if any(s < 3 for s in sizes):
        raise FamilyError("clique sizes must be >= 3")
    if len(cross_edge_sets) != k - 1:
        raise FamilyError(f"expected {k - 1} cross-edge sets, got {len(cross_edge_sets)}")
    off = _offsets(sizes)
    edges = []
    for i, s in enumerate(sizes):
        edges += [(off[i] + a, off[i] + b) for a, b in combinations(range(s), 2)]
    for i, pairs in enumerate(cross_edge_sets):
        for a, b in _check_cross(pairs, sizes[i], sizes[i + 1]):
            edges.append((off[i] + a, off[i + 1] + b))
    return from_edges(sum(sizes), edges)


def chain_of_graphs(blocks: Sequence[tuple[Graph, int | None, int | None]]) -> Graph:
    """S(G_1, ..., G_k): blocks in a row joined by single bridges.

    Each block is ``(graph, left_attach, right_attach)``; the first block has
    no left attachment and the last no right one.  Attachment vertices must
    have full degree inside their block, and an internal block must use two
    distinct ones.
    """
    k = len(blocks)
    if k < 2:
        raise FamilyError("a chain needs at least two blocks")
    for i, (g, left, right) in enumerate(blocks):
        if g.n < 3:
            raise FamilyError(f"block {i} has order {g.n} < 3")
        wanted = (i > 0, i < k - 1)
        if (left is not None, right is not None) != wanted:
            raise FamilyError(f"block {i} must have attachments (left, right) present = {wanted}")
        for x in (left, right):
            if x is not None and (not 0 <= x < g.n or g.degree(x) != g.n - 1):
                raise FamilyError(f"attachment {x} of block {i} lacks full degree")
        if left is not None and left == right:
            raise FamilyError(f"internal block {i} needs distinct attachment vertices")
    g = blocks[0][0]
    off = [0]
    for b, _, _ in blocks[1:]:
        off.append(g.n)
        g = disjoint_union(g, b)
    for i in range(k - 1):
        g = add_edge(g, (off[i] + blocks[i][2], off[i + 1] + blocks[i + 1][1]))
    return g


def clique_chain(sizes: Sequence[int]) -> Graph:
    """S(K_{n_1}, ..., K_{n_k}); bridges leave from local vertex 1 (0 on the
    first clique) and arrive at local vertex 0."""
    k = len(sizes)
    blocks = []
    for i, s in enumerate(sizes):
        left = 0 if i > 0 else None
        right = (1 if i > 0 else 0) if i < k - 1 else None
        blocks.append((complete(s), left, right))
    return chain_of_graphs(blocks)


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance.

    ``params`` holds the integer parameters of the kind (``complete``: (n,),
    ``generalized_barbell``: (n,), ``clique_chain``: the sizes, ...).
    ``cross_edges`` is used by the generalized kinds: one tuple of pairs for
    ``generalized_barbell``, one per consecutive pair for
    ``generalized_clique_chain``.  ``parts`` holds the members of ``union``
    and the blocks of ``chain_of_graphs``.
    """

    kind: str
    params: tuple[int, ...] = ()
    cross_edges: tuple = ()
    parts: tuple = field(default=(), compare=True)
    text: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family kind {self.kind!r}")

    def build(self) -> Graph:
        return build(self)

    def __str__(self):
        return self.text or f"{self.kind}{self.params}"


def build(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "complete":
        return complete(*p)
    if k == "complete_multipartite":
        return complete_multipartite(p)
    if k == "path":
        return path(*p)
    if k == "cycle":
        return cycle(*p)
    if k == "star":
        return star(*p)
    if k == "cocktail_party":
        return cocktail_party(*p)
    if k == "book":
        return book(*p)
    if k == "book_complement":
        return book_complement(*p)
    if k == "barbell":
        return barbell(*p)
    if k == "generalized_barbell":
        return generalized_barbell(p[0], spec.cross_edges)
    if k == "clique_chain":
        return clique_chain(p)
    if k == "generalized_clique_chain":
        return generalized_clique_chain(p, spec.cross_edges)
    if k == "chain_of_graphs":
        return chain_of_graphs(spec.parts)
    if k == "union":
        if not spec.parts:
            return empty_graph(0)
        g = spec.parts[0].build()
        for part in spec.parts[1:]:
            g = disjoint_union(g, part.build())
        return g
    raise FamilyError(f"no constructor for {k!r}")
