"""Command-line interface: ``wgcount <verb> [options]``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .algebra import format_poly
from .closed_forms import CLOSED_FAMILIES, closed_count, family_gf
from .counting import DEFAULT_MAX_STATES, CostLimitError, count_auto, series
from .genfun import ReconstructionError, TheoremViolation, quasi_from_gf, rho, verify_graph
from .graph import Graph, GraphError, parse_graph
from .tables import TABLE_NAMES, run_table

VERBS = ("count", "series", "genfun", "quasipoly", "verify", "table")

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

GRAMMAR = ("wgcount <verb> [--graph <dsl-or-path>] [--n <int>] [--terms <int>] "
           "[--method auto|brute|elim|closed] [--format text|json] [--max-states <int>] "
           "[--table <name>]")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wgcount", usage=GRAMMAR,
                description="Count bounded vertex weightings of graphs and their generating functions.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("--graph", help="family DSL (e.g. cycle:4), inline JSON document, or file path")
    p.add_argument("--n", type=int, help="weight bound for count")
    p.add_argument("--terms", type=int, default=10, help="number of series terms")
    p.add_argument("--method", choices=("auto", "brute", "elim", "closed"), default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES,
                   help="brute-force ceiling on (n+1)^m")
    p.add_argument("--table", choices=TABLE_NAMES)
    p.add_argument("--workers", type=int, default=1, help="threads for independent evaluations")
    return p


def load_graph(source: str) -> Graph:
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            return parse_graph(fh.read())
    return parse_graph(source)


def _family_name(g: Graph) -> str:
    return (g.label or "").partition(":")[0]


def _require_closed(g: Graph) -> None:
    if _family_name(g) not in CLOSED_FAMILIES:
        raise UsageError(f"--method closed needs one of the families {', '.join(CLOSED_FAMILIES)}")


def _count(g: Graph, n: int, args) -> int:
    if args.method == "closed":
        _require_closed(g)
        return closed_count(g.label, n)
    return count_auto(g, n, args.method, args.max_states)


def _gf(g: Graph, args):
    if args.method == "closed":
        _require_closed(g)
        return family_gf(g.label)
    return rho(g, args.method, args.max_states, args.workers)


def execute(args) -> tuple[int, dict, list[str]]:
    """Run one command; returns (exit status, JSON document, text lines)."""
    doc = {"command": args.verb, "graph": None, "result": {}, "checks": []}
    lines: list[str] = []
    status = EXIT_OK

    if args.verb == "table":
        if not args.table:
            raise UsageError("table needs --table <name>")
        rows = run_table(args.table, args.method, args.max_states, args.workers)
        doc["result"] = {"table": args.table, "rows": len(rows),
                         "passed": sum(r.passed for r in rows)}
        doc["checks"] = [r.to_document() for r in rows]
        for r in rows:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.id:<10} {r.source}")
            for d in r.details:
                if not d["ok"]:
                    lines.append(f"      {d['field']}: expected {d['expected']}, got {d['actual']}")
        lines.append(f"{doc['result']['passed']}/{len(rows)} entries pass")
        if not all(r.passed for r in rows):
            status = EXIT_VERIFY
        return status, doc, lines

    if not args.graph:
        raise UsageError(f"{args.verb} needs --graph")
    g = load_graph(args.graph)
    doc["graph"] = g.to_document()

    if args.verb == "count":
        if args.n is None or args.n < 0:
            raise UsageError("count needs --n <nonnegative int>")
        value = _count(g, args.n, args)
        doc["result"] = {"n": args.n, "count": value}
        lines.append(str(value))
    elif args.verb == "series":
        if args.terms < 1:
            raise UsageError("--terms must be positive")
        if args.method == "closed":
            values = [_count(g, n, args) for n in range(args.terms)]
        else:
            values = series(g, args.terms, args.method, args.max_states, args.workers)
        doc["result"] = {"terms": args.terms, "series": values}
        lines.append(" ".join(map(str, values)))
    elif args.verb == "genfun":
        gf = _gf(g, args)
        doc["result"] = gf.to_document()
        lines.append(gf.text())
    elif args.verb == "quasipoly":
        qp = quasi_from_gf(_gf(g, args))
        doc["result"] = qp.to_document()
        lines.append(f"period {qp.period}, degree {qp.degree}")
        for r, text in enumerate(doc["result"]["constituents"]):
            lines.append(f"n = {r} mod {qp.period}: {text}")
    else:  # verify
        method = "auto" if args.method == "closed" else args.method
        report = verify_graph(g, method, args.max_states)
        doc["checks"] = report.to_document()
        if report.gf is not None:
            doc["result"] = report.gf.to_document()
            lines.append(f"generating function: {report.gf.text()}")
            lines.append(f"numerator: {format_poly(report.gf.numerator)}")
        for c in report.checks:
            lines.append(f"{c.status.upper():<5} {c.name}")
        if not report.ok:
            status = EXIT_VERIFY
    return status, doc, lines


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        status, doc, lines = execute(args)
    except UsageError as exc:
        print(f"error: {exc}\nusage: {GRAMMAR}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, CostLimitError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TheoremViolation, ReconstructionError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    if args.format == "json":
        print(render_json(doc))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
