"""Deterministic renderers: markdown, CSV, JSON, and DOT for every target.

Each builder produces a plain-data payload (dicts, lists, strings) and each
renderer is a pure function of that payload, so identical invocations are
byte-identical.  JSON table cells use the grammar "0", "+R", "-R", "+8",
"-8", "+X", "-X", "+S", "-S", and signed vertex letters.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .emanation import CensusReport, SweepReport, census, find_box_kites, trip_sync_sweep, zd_graph
from .kites import (
    LETTERS,
    STRUT_LETTER_PAIRS,
    BoxKite,
    build_box_kite,
    goto_numbers,
)
from .lariats import (
    LariatTable,
    QuizzicalLariat,
    mock_octonion_table,
    quizzical_tables,
    switching_yard,
    trip_sync_report,
)

ROMAN = {1: "I", 2: "II", 3: "III", 4: "IV", 5: "V", 6: "VI", 7: "VII"}

FORMATS = ("markdown", "csv", "json", "dot")
TARGETS = (
    "strut-table",
    "box-kite",
    "yard",
    "mock",
    "quizzical",
    "sync-table",
    "pathion",
    "census",
    "tripsync",
)


@dataclass(frozen=True)
class RenderSpec:
    """A fully resolved emission request."""

    target: str
    format: str = "markdown"
    n: int = 4
    s: int = 1
    strut: str = "AF"
    s_values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")


def markdown_table(headers, rows) -> str:
    lines = [
        "| " + " | ".join(str(h) for h in headers) + " |",
        "| " + " | ".join("---" for _ in headers) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


def csv_table(headers, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()


def json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ---------------------------------------------------------------- payloads

def box_kite_payload(bk: BoxKite) -> dict:
    edges = []
    for i, p in enumerate(LETTERS):
        for q in LETTERS[i + 1 :]:
            sign = bk.edge_signs.get(frozenset((p, q)))
            if sign is not None:
                edges.append({"ends": [p, q], "sign": "+" if sign > 0 else "-"})
    return {
        "n": bk.n,
        "s": bk.s,
        "vertices": {p: list(bk.vertex(p).indices) for p in LETTERS},
        "edges": edges,
        "struts": [list(pair) for pair in STRUT_LETTER_PAIRS],
    }


def parse_box_kite(payload: dict) -> BoxKite:
    """Rebuild (and revalidate) a box-kite from its JSON payload."""
    from .kites import Assessor

    vertex_map = {
        letter: Assessor(payload["n"], o, hi)
        for letter, (o, hi) in payload["vertices"].items()
    }
    return BoxKite.assemble(payload["n"], payload["s"], vertex_map)


def table_payload(table: LariatTable, strut: str | None = None) -> dict:
    payload = {
        "n": table.n,
        "s": table.s,
        "symbols": list(table.symbols),
        "cells": [list(row) for row in table.cell_strings()],
    }
    if strut is not None:
        payload["strut"] = strut
    return payload


def quizzical_payload(tables: list[QuizzicalLariat]) -> dict:
    return {
        "n": tables[0].n,
        "s": tables[0].s,
        "lariats": [
            {
                "sail": t.sail_name,
                "symbols": list(t.symbols),
                "cells": [[str(c) for c in row] for row in t.cells],
                "relations_hold": t.relations_hold,
            }
            for t in tables
        ],
    }


def strut_table_payload() -> dict:
    rows = []
    for s in range(1, 8):
        bk = build_box_kite(s)
        rows.append(
            {
                "s": s,
                "goto": list(goto_numbers(bk)),
                "vertices": {p: list(bk.vertex(p).indices) for p in LETTERS},
            }
        )
    return {"n": 4, "rows": rows}


def sync_table_payload() -> dict:
    rows = []
    for s in range(1, 8):
        report = trip_sync_report(build_box_kite(s))
        rows.append(
            {
                "s": s,
                "sails": [
                    {
                        "name": sail.name,
                        "trips": [
                            {"trip": list(trip), "orientation": orientation}
                            for trip, orientation in zip(sail.trips, sail.orientations)
                        ],
                        "passed": sail.passed,
                    }
                    for sail in report.sails
                ],
            }
        )
    return {"n": 4, "rows": rows}


def pathion_payload(n: int, s: int) -> dict:
    kites = find_box_kites(n, s)
    return {
        "n": n,
        "s": s,
        "kites": [
            {"vertices": {p: list(k.vertex(p).indices) for p in LETTERS}}
            for k in kites
        ],
    }


def census_payload(report: CensusReport) -> dict:
    payload = {
        "n": report.n,
        "per_s": {str(s): count for s, count in sorted(report.per_s.items())},
        "total": report.total,
    }
    if report.n == 5:
        low = sum(count for s, count in report.per_s.items() if s <= 8)
        high = sum(count for s, count in report.per_s.items() if s > 8)
        payload["notes"] = [
            f"enumerated: {low} kites for s <= 8 plus {high} for s > 8 = {report.total}",
            f"stated grand total 84 vs componentwise arithmetic 8*7 + 7*3 = 77; "
            f"enumeration agrees with {report.total}",
        ]
    return payload


def sweep_payload(report: SweepReport) -> dict:
    return {
        "n": report.n,
        "s_values": list(report.s_values),
        "kites": [
            {
                "s": entry.s,
                "abc": list(entry.abc_lows),
                "passed": entry.passed,
                "counterexamples": [list(t) for t in entry.counterexamples],
            }
            for entry in report.entries
        ],
        "all_passed": report.all_passed,
    }


def dot_zd_graph(n: int, s: int) -> str:
    """DOT text for the zero-divisor graph; vertices named o_hi."""
    graph = zd_graph(n, s)
    lines = [f'graph zd_{n}_{s} {{']
    for assessor in graph.assessors:
        lines.append(f'  "{assessor.o}_{assessor.hi}";')
    for a1, a2, sign in graph.edges():
        mark = "+" if sign > 0 else "-"
        lines.append(f'  "{a1.o}_{a1.hi}" -- "{a2.o}_{a2.hi}" [sign="{mark}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------- rendering

def _vertex_cell(payload_vertices: dict, letter: str) -> str:
    o, hi = payload_vertices[letter]
    return f"{o},{hi}"


def _render_strut_table(fmt: str) -> str:
    payload = strut_table_payload()
    if fmt == "json":
        return json_text(payload)
    headers = ["Box-Kite", "GoTo", "A", "B", "C", "D", "E", "F"]
    rows = [
        [ROMAN[row["s"]], " ".join(str(g) for g in row["goto"])]
        + [_vertex_cell(row["vertices"], p) for p in LETTERS]
        for row in payload["rows"]
    ]
    return markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)


def _render_table(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json_text(payload)
    headers = ["*"] + payload["symbols"]
    rows = [
        [sym] + list(cells) for sym, cells in zip(payload["symbols"], payload["cells"])
    ]
    return markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)


def _render_quizzical(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json_text(payload)
    blocks = []
    for lariat in payload["lariats"]:
        headers = ["*"] + lariat["symbols"]
        rows = [
            [sym] + list(cells)
            for sym, cells in zip(lariat["symbols"], lariat["cells"])
        ]
        title = f"{lariat['sail']}: " + " ".join(lariat["symbols"])
        table = markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)
        blocks.append(f"{title}\n{table}")
    return "\n".join(blocks)


def _render_sync_table(fmt: str) -> str:
    payload = sync_table_payload()
    if fmt == "json":
        return json_text(payload)
    headers = ["BK"] + [sail["name"] for sail in payload["rows"][0]["sails"]]
    rows = []
    for row in payload["rows"]:
        cells = []
        for sail in row["sails"]:
            cells.append(
                " ".join(
                    "({}){}".format(
                        " ".join(str(i) for i in t["trip"]),
                        "+" if t["orientation"] > 0 else "-",
                    )
                    for t in sail["trips"]
                )
            )
        rows.append([ROMAN[row["s"]]] + cells)
    return markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)


def _render_pathion(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json_text(payload)
    headers = ["Kite"] + list(LETTERS)
    rows = [
        [i + 1] + [_vertex_cell(kite["vertices"], p) for p in LETTERS]
        for i, kite in enumerate(payload["kites"])
    ]
    return markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)


def _render_census(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json_text(payload)
    headers = ["s", "box-kites"]
    rows = [[s, count] for s, count in payload["per_s"].items()]
    rows.append(["total", payload["total"]])
    text = markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)
    for note in payload.get("notes", []):
        text += f"note: {note}\n"
    return text


def _render_sweep(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json_text(payload)
    headers = ["s", "ABC", "trip-sync", "counterexamples"]
    rows = [
        [
            kite["s"],
            " ".join(str(i) for i in kite["abc"]),
            "pass" if kite["passed"] else "FAIL",
            "; ".join(" ".join(str(i) for i in t) for t in kite["counterexamples"]),
        ]
        for kite in payload["kites"]
    ]
    text = markdown_table(headers, rows) if fmt == "markdown" else csv_table(headers, rows)
    verdict = "pass" if payload["all_passed"] else "FAIL"
    return text + f"overall: {verdict} over {len(payload['kites'])} kites\n"


def cmd_emit(spec: RenderSpec) -> str:
    """Render one target; deterministic byte-for-byte."""
    if spec.format == "dot":
        if spec.target not in ("box-kite", "pathion"):
            raise ValueError("dot output renders zero-divisor graphs; "
                             "use the box-kite or pathion targets")
        return dot_zd_graph(spec.n, spec.s)
    if spec.target == "strut-table":
        return _render_strut_table(spec.format)
    if spec.target == "box-kite":
        bk = build_box_kite(spec.s) if spec.n == 4 else _general_kite(spec.n, spec.s)
        payload = box_kite_payload(bk)
        if spec.format == "json":
            return json_text(payload)
        headers = ["vertex", "o", "hi"]
        rows = [[p, *payload["vertices"][p]] for p in LETTERS]
        text = markdown_table(headers, rows) if spec.format == "markdown" else csv_table(headers, rows)
        edge_rows = [[*e["ends"], e["sign"]] for e in payload["edges"]]
        edge_headers = ["end1", "end2", "sign"]
        text += markdown_table(edge_headers, edge_rows) if spec.format == "markdown" else csv_table(edge_headers, edge_rows)
        return text
    if spec.target == "yard":
        return _render_table(table_payload(switching_yard(build_box_kite(spec.s))), spec.format)
    if spec.target == "mock":
        table = mock_octonion_table(build_box_kite(spec.s), spec.strut)
        return _render_table(table_payload(table, strut=spec.strut), spec.format)
    if spec.target == "quizzical":
        return _render_quizzical(quizzical_payload(quizzical_tables(build_box_kite(spec.s))), spec.format)
    if spec.target == "sync-table":
        return _render_sync_table(spec.format)
    if spec.target == "pathion":
        return _render_pathion(pathion_payload(spec.n, spec.s), spec.format)
    if spec.target == "census":
        return _render_census(census_payload(census(spec.n)), spec.format)
    if spec.target == "tripsync":
        report = trip_sync_sweep(spec.n, spec.s_values or None)
        return _render_sweep(sweep_payload(report), spec.format)
    raise ValueError(f"unknown target {spec.target!r}")


def _general_kite(n: int, s: int) -> BoxKite:
    kites = find_box_kites(n, s)
    if not kites:
        raise ValueError(f"no box-kite found for n={n}, s={s}")
    return kites[0]
