"""Text formats: graph6, edge lists, family spec strings and report rows.

graph6 (short form, order <= 62): one byte ``63 + n`` followed by the
upper triangle bits in column order (0,1), (0,2), (1,2), (0,3), ... packed
big-endian into 6-bit groups, each written as ``63 + group`` and zero
padded at the end.
"""

from __future__ import annotations

import re
from typing import Iterator, TextIO

from dompoly import families as fam
from dompoly.families import FamilyError, FamilySpec
from dompoly.graph import Graph, GraphError, from_edges

GRAPH6_MAX_N = 62


class FormatError(ValueError):
    pass


def _pairs(n: int):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def decode_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 line")
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= b <= 63 for b in data):
        raise FormatError(f"byte outside [63, 126] in {s!r}")
    n = data[0]
    if n > GRAPH6_MAX_N:
        raise FormatError("only the short graph6 form (order <= 62) is supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) != 1 + nbytes:
        raise FormatError(f"expected {1 + nbytes} bytes for order {n}, got {len(data)}")
    bits = 0
    for b in data[1:]:
        bits = bits << 6 | b
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise FormatError("nonzero padding bits")
    bits >>= pad
    edges = []
    for k, (u, v) in enumerate(_pairs(n)):
        if bits >> (nbits - 1 - k) & 1:
            edges.append((u, v))
    return from_edges(n, edges)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > GRAPH6_MAX_N:
        raise FormatError(f"order {n} too large for the short graph6 form")
    bits = []
    for u, v in _pairs(n):
        bits.append(1 if g.has_edge(u, v) else 0)
    bits += [0] * (-len(bits) % 6)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i:i + 6]:
            group = group << 1 | b
        out.append(chr(63 + group))
    return "".join(out)


def read_graph6(stream: TextIO) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each nonblank line."""
    for lineno, line in enumerate(stream, 1):
        if line.strip():
            yield lineno, decode_graph6(line)


def parse_edge_list(text: str) -> Graph:
    """``n <count>`` on the first line, then one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n" or not head[1].isdigit():
        raise FormatError(f"expected 'n <count>' header, got {lines[0]!r}")
    n = int(head[1])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(re.fullmatch(r"\d+", p) for p in parts):
            raise FormatError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


# family spec strings ------------------------------------------------------

_ALIASES = {
    "K": "complete",
    "complete": "complete",
    "multipartite": "complete_multipartite",
    "path": "path",
    "P": "path",
    "cycle": "cycle",
    "C": "cycle",
    "star": "star",
    "cp": "cocktail_party",
    "cocktail": "cocktail_party",
    "book": "book",
    "book_c": "book_complement",
    "barbell": "barbell",
    "genbarbell": "generalized_barbell",
    "chain": "clique_chain",
    "genchain": "generalized_clique_chain",
    "turan": "turan",
}

_SHORT = {v: k for k, v in reversed(list(_ALIASES.items()))}


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from None


def _pairs_text(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for tok in text.split(","):
        m = re.fullmatch(r"(\d+)-(\d+)", tok.strip())
        if not m:
            raise FormatError(f"expected a pair like 0-1, got {tok!r}")
        out.append((int(m.group(1)), int(m.group(2))))
    return tuple(out)


def parse_family(text: str) -> FamilySpec:
    """Parse a family spec string.

    Forms: ``K:5``, ``multipartite:2,2,2``, ``turan:7,3``, ``path:4``,
    ``cycle:5``, ``star:3``, ``cp:3``, ``book:2``, ``book_c:4``,
    ``barbell:8``, ``genbarbell:3:0-0,1-1``, ``genbarbell:3:t=2``,
    ``chain:K3,K4,K3``, ``chain:K3,K4,K3:t=2`` and
    ``genchain:3,4:0-0,1-1/0-0`` (one ``/``-separated pair list per
    consecutive clique pair).  ``A+B`` is the disjoint union.
    """
    text = text.strip()
    if "+" in text:
        parts = tuple(parse_family(t) for t in text.split("+"))
        return FamilySpec("union", parts=parts, text=text)
    fields = text.split(":")
    name = fields[0]
    if name not in _ALIASES or len(fields) < 2:
        raise FormatError(f"unknown family spec {text!r}")
    kind = _ALIASES[name]
    args = fields[1:]
    try:
        if kind == "turan":
            n, r = _ints(args[0])
            sizes = [len(range(i, n, r)) for i in range(r)]
            return FamilySpec("complete_multipartite", tuple(sorted(sizes, reverse=True)), text=text)
        if kind == "generalized_barbell":
            (n,) = _ints(args[0])
            if len(args) != 2:
                raise FormatError("genbarbell needs cross pairs or t=<count>")
            if args[1].startswith("t="):
                pairs = tuple(fam.default_cross_pairs(n, n, int(args[1][2:])))
            else:
                pairs = _pairs_text(args[1])
            return FamilySpec(kind, (n,), cross_edges=pairs, text=text)
        if kind == "clique_chain":
            sizes = tuple(int(tok.lstrip("K")) for tok in args[0].split(","))
            if len(args) == 1:
                return FamilySpec(kind, sizes, text=text)
            if not args[1].startswith("t="):
                raise FormatError(f"expected t=<count>, got {args[1]!r}")
            t = int(args[1][2:])
            cross = tuple(tuple(fam.default_cross_pairs(a, b, t)) for a, b in zip(sizes, sizes[1:]))
            return FamilySpec("generalized_clique_chain", sizes, cross_edges=cross, text=text)
        if kind == "generalized_clique_chain":
            sizes = _ints(args[0])
            if len(args) != 2:
                raise FormatError("genchain needs cross pair lists")
            cross = tuple(_pairs_text(chunk) for chunk in args[1].split("/"))
            return FamilySpec(kind, sizes, cross_edges=cross, text=text)
        if len(args) != 1:
            raise FormatError(f"too many fields in {text!r}")
        return FamilySpec(kind, _ints(args[0]), text=text)
    except (ValueError, FamilyError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"bad family spec {text!r}: {exc}") from exc


def format_family(spec: FamilySpec) -> str:
    """Canonical text for a spec (inverse of :func:`parse_family`)."""
    if spec.kind == "union":
        return "+".join(format_family(p) for p in spec.parts)
    short = _SHORT.get(spec.kind)
    if short is None or spec.kind == "chain_of_graphs":
        raise FormatError(f"{spec.kind} has no text form")
    if spec.kind == "generalized_barbell":
        return f"{short}:{spec.params[0]}:" + ",".join(f"{a}-{b}" for a, b in spec.cross_edges)
    if spec.kind == "clique_chain":
        return f"{short}:" + ",".join(f"K{s}" for s in spec.params)
    if spec.kind == "generalized_clique_chain":
        cross = "/".join(",".join(f"{a}-{b}" for a, b in pairs) for pairs in spec.cross_edges)
        return f"{short}:" + ",".join(map(str, spec.params)) + ":" + cross
    return f"{short}:" + ",".join(map(str, spec.params))
