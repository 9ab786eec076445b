"""Reference tables: recompute each transcribed entry and diff it."""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .algebra import Poly
from .closed_forms import CLOSED_FAMILIES, family_gf
from .counting import DEFAULT_MAX_STATES
from .genfun import RationalGF, quasi_from_gf, rho
from .graph import parse_graph

TABLE_NAMES = ("paths-cycles", "complete", "hypercubes", "bicliques", "examples")


@lru_cache(maxsize=1)
def load_tables() -> dict:
    text = resources.files("wgcount").joinpath("data/tables.json").read_text()
    return json.loads(text)


@dataclass
class TableRow:
    id: str
    source: str
    passed: bool
    details: list = field(default_factory=list)

    def to_document(self) -> dict:
        return {"id": self.id, "source": self.source,
                "status": "PASS" if self.passed else "FAIL", "details": self.details}


def expected_constituents(quasi: dict) -> list[Poly]:
    """Per-residue polynomials in n from a transcribed quasi-polynomial."""
    if "coeffs" in quasi:
        return [Poly(Fraction(c) for c in quasi["coeffs"])]
    if "factors" in quasi:
        poly = Poly([Fraction(quasi.get("scale", "1"))])
        for f in quasi["factors"]:
            poly = poly * Poly(f)
        return [poly]
    base = Poly(Fraction(c) for c in quasi["base"])
    alt = Poly(Fraction(c) for c in quasi["alternating"])
    return [base + alt, base - alt]


def _gf_for(entry: dict, table: str, method: str, max_states: int) -> RationalGF:
    graph = parse_graph(entry["graph"])
    family_name = (graph.label or "").partition(":")[0]
    # complete graphs always come from their closed count; counting K_7 directly is infeasible
    if table == "complete" or (method == "closed" and family_name in CLOSED_FAMILIES):
        return family_gf(graph.label)
    return rho(graph, "auto" if method == "closed" else method, max_states)


def check_entry(entry: dict, table: str, method: str = "auto",
                max_states: int = DEFAULT_MAX_STATES) -> TableRow:
    row = TableRow(entry["id"], entry.get("source", ""), True)

    def compare(what, expected, actual):
        ok = expected == actual
        row.details.append({"field": what, "expected": str(expected), "actual": str(actual),
                            "ok": ok})
        row.passed &= ok

    gf = _gf_for(entry, table, method, max_states)
    if "text" in entry:
        compare("text", entry["text"], gf.text())
    if "squared_form" in entry:
        compare("squared_form", entry["squared_form"], gf.squared_text())
    if "numerator_factors" in entry:
        num = Poly.one()
        for f in entry["numerator_factors"]:
            num = num * Poly(f)
        compare("numerator", num, gf.numerator)
    if "exp_one" in entry:
        compare("exp_one", entry["exp_one"], gf.exp_one)
    if "exp_minus" in entry:
        compare("exp_minus", entry["exp_minus"], gf.exp_minus)
    if "same_as" in entry:
        other = _gf_for({"graph": entry["same_as"]}, table, method, max_states)
        compare("same_as " + entry["same_as"], other.text(), gf.text())
    if "quasi" in entry:
        expected = expected_constituents(entry["quasi"])
        qp = quasi_from_gf(gf)
        actual = [qp.constituent(r) for r in range(qp.period)]
        if len(expected) == 1 and len(actual) == 2 and actual[0] == actual[1]:
            actual = actual[:1]
        compare("quasi", [str(p) for p in expected], [str(p) for p in actual])
    if "h_vector" in entry:
        graph = parse_graph(entry["graph"])
        compare("h_vector", list(entry["h_vector"]), list(gf.numerator.padded(graph.m + 1)))
    return row


def run_table(name: str, method: str = "auto", max_states: int = DEFAULT_MAX_STATES,
              workers: int = 1) -> list[TableRow]:
    if name not in TABLE_NAMES:
        raise KeyError(f"unknown table {name!r}; expected one of {', '.join(TABLE_NAMES)}")
    entries = load_tables()[name]

    def work(entry):
        return check_entry(entry, name, method, max_states)

    if workers <= 1:
        return [work(e) for e in entries]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, entries))
