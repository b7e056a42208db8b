"""Output rendering shared by the command line tools.

Machine output is JSON printed by a small emitter that formats every float
with ``%.12g``, so identical inputs give byte-identical reports.  Human
output is a short header plus aligned text tables.  Plot data is TSV with
a single header line, one series per column.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from . import __version__
from .cake import Allocation, Piece
from .errors import MissingSection, Unsupported
from .games import payoff_curve, proposal_table
from .protocols import ProtocolOutcome, cut_and_choose_3
from .scenario import Scenario, fmt_num, scenario_digest
from .valuation import density

PLOT_KINDS = ("densities", "payoffs-by-cutter", "water-curve",
              "proposal-heatmap")
DENSITY_POINTS = 512


# ---------------------------------------------------------------------------
# Deterministic JSON
# ---------------------------------------------------------------------------

def _json_string(s: str) -> str:
    out = ['"']
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append("\\u%04x" % ord(ch))
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def _scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        x = float(value)
        if not math.isfinite(x):
            raise Unsupported("non-finite number in report")
        return fmt_num(x)
    if isinstance(value, str):
        return _json_string(value)
    raise Unsupported(f"cannot render {type(value).__name__} in a report")


def _is_scalar(value) -> bool:
    return value is None or isinstance(
        value, (bool, int, float, str, np.integer, np.floating))


def _emit(value, pad: str, out: list[str]) -> None:
    if isinstance(value, dict):
        if not value:
            out.append("{}")
            return
        out.append("{\n")
        items = list(value.items())
        for i, (k, v) in enumerate(items):
            out.append(pad + "  " + _json_string(str(k)) + ": ")
            _emit(v, pad + "  ", out)
            out.append(",\n" if i + 1 < len(items) else "\n")
        out.append(pad + "}")
    elif isinstance(value, (list, tuple)):
        seq = list(value)
        if not seq:
            out.append("[]")
        elif all(_is_scalar(v) for v in seq):
            out.append("[" + ", ".join(_scalar(v) for v in seq) + "]")
        else:
            out.append("[\n")
            for i, v in enumerate(seq):
                out.append(pad + "  ")
                _emit(v, pad + "  ", out)
                out.append(",\n" if i + 1 < len(seq) else "\n")
            out.append(pad + "]")
    else:
        out.append(_scalar(value))


def to_json(value) -> str:
    out: list[str] = []
    _emit(value, "", out)
    return "".join(out)


# ---------------------------------------------------------------------------
# Report envelopes
# ---------------------------------------------------------------------------

def machine_text(scenario: Scenario, command: str, result: dict) -> str:
    body = {
        "tool": "cakeshare",
        "version": __version__,
        "command": command,
        "scenario": scenario.name,
        "scenario_digest": scenario_digest(scenario),
        "result": result,
    }
    return to_json(body) + "\n"


def human_text(scenario: Scenario, command: str, lines: list[str]) -> str:
    head = (f"cakeshare {command} (v{__version__}) | scenario {scenario.name} "
            f"[{scenario_digest(scenario)}]")
    return "\n".join([head, ""] + lines) + "\n"


def table_lines(headers: list[str], rows: list[list[str]]) -> list[str]:
    cells = [headers] + rows
    widths = [max(len(row[j]) for row in cells) for j in range(len(headers))]

    def fmt_row(row: list[str]) -> str:
        parts = [row[0].ljust(widths[0])]
        parts += [row[j].rjust(widths[j]) for j in range(1, len(row))]
        return "  ".join(parts).rstrip()

    return ([fmt_row(headers), fmt_row(["-" * w for w in widths])]
            + [fmt_row(r) for r in rows])


# ---------------------------------------------------------------------------
# Structured views of core objects
# ---------------------------------------------------------------------------

def piece_bounds(piece: Piece) -> list[list[float]]:
    return [[iv.lo, iv.hi] for iv in piece]


def piece_label(piece: Piece) -> str:
    if not piece.intervals:
        return "(empty)"
    return " u ".join(f"[{fmt_num(iv.lo)}, {fmt_num(iv.hi)}]" for iv in piece)


def allocation_dict(alloc: Allocation) -> dict:
    return {
        "agents": list(alloc.agents),
        "pieces": [piece_bounds(p) for p in alloc.pieces],
    }


def trace_list(trace) -> list[dict]:
    steps = []
    for step in trace:
        entry = {"kind": step.kind}
        for f in dataclasses.fields(step):
            if f.name != "kind":
                entry[f.name] = getattr(step, f.name)
        steps.append(entry)
    return steps


def outcome_dict(outcome: ProtocolOutcome) -> dict:
    return {
        "allocation": allocation_dict(outcome.allocation),
        "payoffs": list(outcome.payoffs),
        "trace": trace_list(outcome.trace),
        "meta": dict(outcome.meta),
    }


# ---------------------------------------------------------------------------
# Plot data
# ---------------------------------------------------------------------------

def _tsv(header: list[str], rows: list[list[float]]) -> str:
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(
            cell if isinstance(cell, str) else fmt_num(float(cell))
            for cell in row))
    return "\n".join(lines) + "\n"


def emit_plot_data(scenario: Scenario, kind: str) -> str:
    if kind == "densities":
        xs = np.linspace(0.0, 1.0, DENSITY_POINTS)
        cols = [np.asarray(density(v, xs), dtype=float)
                for v in scenario.valuations]
        rows = [[float(xs[i])] + [float(c[i]) for c in cols]
                for i in range(DENSITY_POINTS)]
        return _tsv(["x"] + list(scenario.agents), rows)
    if kind == "payoffs-by-cutter":
        if len(scenario.agents) != 3:
            raise Unsupported("payoffs-by-cutter needs a three-agent scenario")
        rows = []
        for cutter in scenario.agents:
            outcome = cut_and_choose_3(list(scenario.valuations),
                                       cutter=cutter,
                                       priority=scenario.priority)
            by_agent = dict(zip(outcome.allocation.agents, outcome.payoffs))
            rows.append([cutter] + [by_agent[a] for a in scenario.agents])
        return _tsv(["cutter"] + list(scenario.agents), rows)
    if kind == "water-curve":
        if scenario.curve is None:
            raise MissingSection("scenario has no [game.curve] section")
        table = payoff_curve(scenario.curve)
        rows = [[table.shares[i]] + list(table.payoffs[i])
                for i in range(len(table.shares))]
        return _tsv(["share"] + list(table.agents), rows)
    if kind == "proposal-heatmap":
        if scenario.proposals is None:
            raise MissingSection("scenario has no [game.proposals] section")
        annotated = proposal_table(scenario.proposals)
        rows = [[annotated.agents[i]] + list(annotated.intensities[i])
                for i in range(len(annotated.agents))]
        return _tsv(["proposer"] + list(annotated.agents), rows)
    raise Unsupported(f"unknown plot kind {kind!r}")
