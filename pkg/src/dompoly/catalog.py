"""All graphs of a small order up to isomorphism, built from first principles.

Used to produce the test fixtures; real sweeps should ingest a published
graph6 catalog instead (e.g. ``geng 6`` / ``geng -c 6`` from nauty).
Every graph on n vertices is some graph on n - 1 vertices plus one vertex,
so extending each order-(n-1) class by every neighbour set and removing
isomorphic duplicates yields every class of order n.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from pathlib import Path

from dompoly.equivalence import are_isomorphic, graph_invariant, is_connected
from dompoly.formats import encode_graph6, read_graph6
from dompoly.graph import Graph

CATALOG_MAX_N = 7


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    if not 0 <= n <= CATALOG_MAX_N:
        raise ValueError(f"catalog generation supports 0 <= n <= {CATALOG_MAX_N}")
    if n == 0:
        return (Graph(0, ()),)
    reps: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = defaultdict(list)
    new = n - 1
    for g in all_graphs(n - 1):
        for nb in range(1 << new):
            masks = [m | ((nb >> v & 1) << new) for v, m in enumerate(g.masks)]
            h = Graph(n, tuple(masks) + (nb,))
            bucket = buckets[graph_invariant(h)]
            if not any(are_isomorphic(h, r, max_n=n) for r in bucket):
                bucket.append(h)
                reps.append(h)
    reps.sort(key=lambda g: (g.m, encode_graph6(g)))
    return tuple(reps)


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if is_connected(g))


def write_catalog(path: str | Path, graphs) -> None:
    Path(path).write_text("".join(encode_graph6(g) + "\n" for g in graphs))


def load_catalog(path: str | Path) -> list[tuple[str, Graph]]:
    """``(source_id, graph)`` pairs, source id ``<file name>:<line>``."""
    path = Path(path)
    with path.open() as fh:
        return [(f"{path.name}:{lineno}", g) for lineno, g in read_graph6(fh)]
