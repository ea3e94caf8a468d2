"""Command-line interface.

    dompoly poly --family barbell:3
    dompoly members --target barbell:3 --catalog connected6.g6 --connected
    dompoly verify --catalog graphs6.g6

JSON output has the shape ``{command, inputs, results, failures}``; the
exit status is 0 iff ``failures`` is empty.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from dompoly import engine
from dompoly.catalog import load_catalog
from dompoly.closed_forms import UnsupportedFamily, closed_form
from dompoly.equivalence import CatalogRecord, ClassReport, classify_catalog, find_class_members, is_connected
from dompoly.families import FamilyError
from dompoly.formats import FormatError, decode_graph6, encode_graph6, format_edge_list, parse_edge_list, parse_family
from dompoly.graph import GraphError
from dompoly.polynomial import to_display
from dompoly.verify import FAIL, run_all

COMMANDS = ("poly", "family", "covered", "irrelevant", "recurrence-check", "classify", "members", "verify")


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dompoly", description="Exact domination polynomials.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--family", action="append", default=[], metavar="SPEC",
                        help="family instance, e.g. barbell:8, genbarbell:3:0-0,1-1, book_c:4")
    parser.add_argument("--graph6", action="append", default=[], metavar="STR")
    parser.add_argument("--edges", action="append", default=[], metavar="PATH")
    parser.add_argument("--catalog", action="append", default=[], metavar="PATH",
                        help="graph6 file, one graph per line")
    parser.add_argument("--target", metavar="SPEC", help="family whose polynomial defines the class (members)")
    parser.add_argument("--connected", action="store_true", help="only connected graphs")
    parser.add_argument("--max-n", type=int, default=None, help="override the enumeration guard")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "csv", "text"), default="text")
    parser.add_argument("--descending", action="store_true", help="display highest power first")
    parser.add_argument("--as", dest="emit", choices=("graph6", "edges"), default="graph6",
                        help="output form for the family command")
    parser.add_argument("--check", action="store_true", help="cross-check irrelevant edges by enumeration")
    parser.add_argument("-v", "--verbose", action="store_true")
    return parser


def _inputs(args) -> list[tuple[str, object, object]]:
    """``(source_id, graph, spec or None)`` for every graph given on the command line."""
    out = []
    for text in args.family:
        spec = parse_family(text)
        out.append((text, spec.build(), spec))
    for s in args.graph6:
        out.append((s, decode_graph6(s), None))
    for path in args.edges:
        out.append((path, parse_edge_list(Path(path).read_text()), None))
    for path in args.catalog:
        out += [(sid, g, None) for sid, g in load_catalog(path)]
    return out


def _class_result(report: ClassReport, descending: bool) -> dict:
    return {
        "key": report.key,
        "display": to_display(report.polynomial, descending),
        "size": len(report.members),
        "members": [r.source_id for r in report.members],
        "iso_classes": None if report.iso_classes is None
        else [[r.source_id for r in cls] for cls in report.iso_classes],
        "connected_iso_classes": report.connected_count,
    }


def execute(args) -> tuple[list[dict], list[dict]]:
    results: list[dict] = []
    failures: list[dict] = []
    cmd = args.command
    max_n = args.max_n

    if cmd == "verify":
        catalog = []
        for path in args.catalog:
            catalog += load_catalog(path)
        for r in run_all(catalog or None, seed=args.seed, workers=max(args.workers, 4)):
            results.append({"check": r.name, "status": r.status, "detail": r.detail})
            if r.status == FAIL:
                failures.append({"check": r.name, "detail": r.detail})
        return results, failures

    if cmd in ("classify", "members"):
        if not args.catalog:
            raise UsageError(f"{cmd} needs --catalog")
        records = [CatalogRecord(g, sid) for path in args.catalog for sid, g in load_catalog(path)]
        bad: list = []
        if cmd == "classify":
            if args.connected:
                records = [r for r in records if is_connected(r.graph)]
            reports = classify_catalog(records, workers=args.workers, max_n=max_n, failures=bad)
        else:
            if not args.target:
                raise UsageError("members needs --target")
            spec = parse_family(args.target)
            try:
                target = closed_form(spec)
            except UnsupportedFamily:
                target = engine.domination_polynomial(spec.build(), max_n)
            reports = [find_class_members(target, records, connected_only=args.connected,
                                          workers=args.workers, max_n=max_n, failures=bad)]
        results += [_class_result(rep, args.descending) for rep in reports]
        failures += [{"source": sid, "error": msg} for sid, msg in bad]
        return results, failures

    graphs = _inputs(args)
    if not graphs:
        raise UsageError(f"{cmd} needs a graph: --family, --graph6, --edges or --catalog")
    for sid, g, spec in graphs:
        try:
            if cmd == "poly":
                p = engine.domination_polynomial(g, max_n)
                row = {"source": sid, "n": g.n, "key": p.key(), "display": to_display(p, args.descending),
                       "closed_form": None, "match": None}
                if spec is not None:
                    try:
                        c = closed_form(spec)
                        row["closed_form"] = c.key()
                        row["match"] = c == p
                        if c != p:
                            failures.append({"source": sid, "error": "closed form differs from enumeration"})
                    except UnsupportedFamily:
                        pass
                results.append(row)
            elif cmd == "family":
                text = encode_graph6(g) if args.emit == "graph6" else format_edge_list(g)
                results.append({"source": sid, "n": g.n, "m": g.m, "graph": text})
            elif cmd == "covered":
                results.append({"source": sid, "covered": [v for v in range(g.n)
                                                           if engine.is_domination_covered(g, v)]})
            elif cmd == "irrelevant":
                edges = engine.irrelevant_edges(g, check=args.check, max_n=max_n)
                results.append({"source": sid, "irrelevant": [list(e) for e in edges]})
            elif cmd == "recurrence-check":
                d = engine.domination_polynomial(g, max_n)
                bad_vertices = [u for u in range(g.n) if engine.recurrence_rhs(g, u, max_n) != d]
                results.append({"source": sid, "vertices": g.n, "mismatches": bad_vertices})
                if bad_vertices:
                    failures.append({"source": sid, "error": f"recurrence fails at {bad_vertices}"})
        except (engine.EnumerationLimitError, AssertionError) as exc:
            failures.append({"source": sid, "error": str(exc)})
    return results, failures


def render_text(cmd: str, results: list[dict], failures: list[dict]) -> str:
    lines = []
    for r in results:
        if cmd == "poly":
            lines.append(f"{r['source']}: {r['display']}")
            if r["match"] is not None:
                lines.append(f"closed-form: {'MATCH' if r['match'] else 'MISMATCH'}")
        elif cmd == "family":
            lines.append(r["graph"].rstrip("\n"))
        elif cmd == "covered":
            lines.append(f"{r['source']}: covered vertices {r['covered']}")
        elif cmd == "irrelevant":
            lines.append(f"{r['source']}: irrelevant edges {[tuple(e) for e in r['irrelevant']]}")
        elif cmd == "recurrence-check":
            state = "OK" if not r["mismatches"] else f"FAIL at {r['mismatches']}"
            lines.append(f"{r['source']}: recurrence at {r['vertices']} vertices {state}")
        elif cmd in ("classify", "members"):
            iso = "n/a" if r["iso_classes"] is None else len(r["iso_classes"])
            lines.append(f"{r['display']}  [{r['size']} graphs, {iso} iso-classes, "
                         f"{r['connected_iso_classes']} connected]")
            for sid in r["members"]:
                lines.append(f"    {sid}")
        elif cmd == "verify":
            lines.append(f"{r['status']:4}  {r['check']}: {r['detail']}")
    return "\n".join(lines) + ("\n" if lines else "")


def render_csv(cmd: str, results: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cmd in ("classify", "members"):
        w.writerow(["source_id", "polynomial"])
        for r in results:
            for sid in r["members"]:
                w.writerow([sid, r["key"]])
    elif results:
        cols = list(results[0])
        w.writerow(cols)
        for r in results:
            w.writerow([json.dumps(r[c]) if isinstance(r[c], (list, dict)) else r[c] for c in cols])
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        results, failures = execute(args)
    except (UsageError, FormatError, FamilyError, GraphError, OSError) as exc:
        print(f"dompoly: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        inputs = {k: v for k, v in vars(args).items() if k != "command"}
        json.dump({"command": args.command, "inputs": inputs, "results": results, "failures": failures},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
    elif args.format == "csv":
        sys.stdout.write(render_csv(args.command, results))
    else:
        sys.stdout.write(render_text(args.command, results, failures))
    for f in failures:
        print(f"dompoly: failure: {f}", file=sys.stderr)
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())
