"""D-equivalence classes over graph catalogs, with small-order isomorphism."""

from __future__ import annotations

import logging
import re
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from dompoly.engine import EnumerationLimitError, domination_polynomial
from dompoly.graph import Graph, GraphError, members
from dompoly.polynomial import DomPolynomial

log = logging.getLogger(__name__)

ISO_MAX_N = 10


class IsomorphismLimitError(ValueError):
    pass


def is_connected(g: Graph) -> bool:
    """Graph search from vertex 0; the null graph counts as connected."""
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def same_polynomial(g: Graph, h: Graph, max_n: int | None = None) -> bool:
    return domination_polynomial(g, max_n) == domination_polynomial(h, max_n)


def vertex_invariants(g: Graph) -> list[tuple]:
    """Per-vertex (degree, sorted neighbour degrees, triangles through v)."""
    deg = g.degrees()
    out = []
    for v in range(g.n):
        nb = members(g.masks[v])
        tri = sum((g.masks[a] & g.masks[v]).bit_count() for a in nb) // 2
        out.append((deg[v], tuple(sorted(deg[u] for u in nb)), tri))
    return out


def graph_invariant(g: Graph) -> tuple:
    """Isomorphism-invariant fingerprint used to bucket candidates."""
    return (g.n, g.m, tuple(sorted(vertex_invariants(g))))


def are_isomorphic(g: Graph, h: Graph, max_n: int = ISO_MAX_N) -> bool:
    """Backtracking search for an adjacency-preserving bijection.

    Candidates for each vertex are restricted to vertices with the same
    local invariant, and every partial map is checked against all vertices
    already placed.
    """
    if g.n != h.n:
        return False
    if g.n > max_n:
        raise IsomorphismLimitError(f"order {g.n} exceeds the isomorphism cap {max_n}")
    inv_g, inv_h = vertex_invariants(g), vertex_invariants(h)
    if g.m != h.m or sorted(inv_g) != sorted(inv_h):
        return False
    by_inv = defaultdict(list)
    for w, key in enumerate(inv_h):
        by_inv[key].append(w)

    # place rare, high-degree vertices first, then keep the order connected
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        touching = [v for v in remaining if g.masks[v] & placed] or list(remaining)
        v = min(touching, key=lambda v: (len(by_inv[inv_g[v]]), -inv_g[v][0], v))
        order.append(v)
        placed |= 1 << v
        remaining.remove(v)

    image = [0] * g.n
    used = [False] * h.n

    def extend(k: int) -> bool:
        if k == g.n:
            return True
        v = order[k]
        for w in by_inv[inv_g[v]]:
            if used[w]:
                continue
            ok = True
            for j in range(k):
                pv = order[j]
                if (g.masks[v] >> pv & 1) != (h.masks[w] >> image[pv] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
        return False

    return extend(0)


_DIGITS = re.compile(r"(\d+)")


def natural_key(text: str) -> tuple:
    """Sort key treating digit runs as numbers, so ``line 9`` < ``line 10``."""
    return tuple((0, int(tok)) if tok.isdigit() else (1, tok) for tok in _DIGITS.split(text) if tok)


@dataclass
class CatalogRecord:
    graph: Graph
    source_id: str
    _polynomial: DomPolynomial | None = field(default=None, repr=False)

    @property
    def polynomial(self) -> DomPolynomial:
        if self._polynomial is None:
            self._polynomial = domination_polynomial(self.graph)
        return self._polynomial

    @polynomial.setter
    def polynomial(self, value: DomPolynomial) -> None:
        self._polynomial = value


@dataclass
class ClassReport:
    """One D-equivalence class found in a catalog.

    ``iso_classes`` is ``None`` when some member is too large for the
    isomorphism search; ``connected_count`` is then ``None`` as well.
    """

    key: str
    members: list[CatalogRecord]
    iso_classes: list[list[CatalogRecord]] | None
    connected_count: int | None

    @property
    def polynomial(self) -> DomPolynomial:
        return DomPolynomial.from_key(self.key)

    @property
    def is_singleton(self) -> bool:
        """D-unique within the catalog: a single isomorphism class."""
        return self.iso_classes is not None and len(self.iso_classes) == 1


def _poly_job(item: tuple[str, Graph, int | None]):
    source_id, g, max_n = item
    try:
        return source_id, domination_polynomial(g, max_n).coeffs, None
    except (EnumerationLimitError, GraphError) as exc:
        return source_id, None, str(exc)


def compute_polynomials(
    records: list[CatalogRecord],
    workers: int = 1,
    max_n: int | None = None,
    failures: list | None = None,
) -> list[CatalogRecord]:
    """Fill in every record's polynomial; returns the records that succeeded.

    Failed records are logged and appended to ``failures`` as
    ``(source_id, message)``.
    """
    todo = [(r.source_id, r.graph, max_n) for r in records if r._polynomial is None]
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_poly_job, todo, chunksize=max(1, len(todo) // (4 * workers))))
    else:
        results = [_poly_job(item) for item in todo]
    by_id = {r.source_id: r for r in records}
    bad = set()
    for source_id, coeffs, err in results:
        if err is None:
            by_id[source_id].polynomial = DomPolynomial(coeffs)
        else:
            log.warning("skipping %s: %s", source_id, err)
            bad.add(source_id)
            if failures is not None:
                failures.append((source_id, err))
    return [r for r in records if r.source_id not in bad]


def iso_partition(records: list[CatalogRecord], max_n: int = ISO_MAX_N) -> list[list[CatalogRecord]]:
    classes: list[list[CatalogRecord]] = []
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for r in records:
        bucket = buckets[graph_invariant(r.graph)]
        for idx in bucket:
            if are_isomorphic(classes[idx][0].graph, r.graph, max_n):
                classes[idx].append(r)
                break
        else:
            bucket.append(len(classes))
            classes.append([r])
    return classes


def _report(key: str, recs: list[CatalogRecord], iso_max_n: int) -> ClassReport:
    recs = sorted(recs, key=lambda r: natural_key(r.source_id))
    if all(r.graph.n <= iso_max_n for r in recs):
        iso = iso_partition(recs, iso_max_n)
        connected = sum(1 for cls in iso if is_connected(cls[0].graph))
    else:
        iso, connected = None, None
    return ClassReport(key, recs, iso, connected)


def _check_unique(records: list[CatalogRecord]) -> None:
    seen = set()
    for r in records:
        if r.source_id in seen:
            raise ValueError(f"duplicate source id {r.source_id!r}")
        seen.add(r.source_id)


def classify_catalog(
    records: Iterable[CatalogRecord],
    workers: int = 1,
    max_n: int | None = None,
    iso_max_n: int = ISO_MAX_N,
    failures: list | None = None,
) -> list[ClassReport]:
    """Group records by exact polynomial, ordered by polynomial then source id."""
    records = list(records)
    _check_unique(records)
    ok = compute_polynomials(records, workers, max_n, failures)
    groups: dict[DomPolynomial, list[CatalogRecord]] = defaultdict(list)
    for r in ok:
        groups[r.polynomial].append(r)
    ordered = sorted(groups, key=lambda p: (len(p.coeffs), p.coeffs))
    return [_report(p.key(), groups[p], iso_max_n) for p in ordered]


def find_class_members(
    target: DomPolynomial,
    records: Iterable[CatalogRecord],
    connected_only: bool = False,
    workers: int = 1,
    max_n: int | None = None,
    iso_max_n: int = ISO_MAX_N,
    failures: list | None = None,
) -> ClassReport:
    """The class of ``target`` within the catalog (possibly empty)."""
    records = list(records)
    _check_unique(records)
    if connected_only:
        records = [r for r in records if is_connected(r.graph)]
    # D(G) has degree |V(G)|, so only graphs of that order can match
    order = target.degree
    records = [r for r in records if r.graph.n == order]
    ok = compute_polynomials(records, workers, max_n, failures)
    hits = [r for r in ok if r.polynomial == target]
    return _report(target.key(), hits, iso_max_n)
