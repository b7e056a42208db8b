"""Command line front end.

Every command loads a scenario (built-in name or TOML path), runs one
analysis, and renders it as human text or machine JSON.  Exit codes:
0 success, 2 invalid input, 3 scenario file does not parse, 4 a
computation refused to run (missing section, search space too large).
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .cake import allocation, piece, validate_allocation
from .errors import (ArityMismatch, ComputationError, MissingSection,
                     ScenarioParseError, Unsupported, ValidationError)
from .fairness import FairnessReport, audit
from .games import best_responses, improving_path, payoff_curve, proposal_table, pure_nash
from .protocols import (ProtocolOutcome, adjusted_winner_2, adjusted_winner_n,
                        cut_and_choose_2, cut_and_choose_3, discretize,
                        maximin_split, selfridge_conway)
from .report import (PLOT_KINDS, allocation_dict, emit_plot_data, human_text,
                     machine_text, outcome_dict, piece_label, table_lines)
from .scenario import Scenario, fmt_num, load_scenario

# icyc: the cutter cuts at the inverse-cumulative quantiles of their own
# valuation and the others choose; cutchoose2 is the two-agent halving.
PROTOCOL_CHOICES = ("icyc", "cutchoose2", "selfridge-conway")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cakeshare",
        description="Fair division of a shared resource along a line.")
    parser.add_argument("--version", action="version",
                        version=f"cakeshare {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--scenario", default="nile",
                       help="built-in name or path to a scenario file")
        p.add_argument("--format", choices=("human", "machine"),
                       default="human")
        p.add_argument("--out", help="write the report here instead of stdout")
        return p

    p = add("divide", "run a division protocol")
    p.add_argument("--protocol", choices=PROTOCOL_CHOICES)
    p.add_argument("--cutter", help="agent who cuts (or divides) first")

    p = add("audit", "check a division for fairness")
    p.add_argument("--pieces",
                   help="explicit allocation, one piece per agent in "
                        "scenario order: 'lo,hi[+lo,hi...];...'")
    p.add_argument("--protocol", choices=PROTOCOL_CHOICES)
    p.add_argument("--cutter")

    p = add("aw", "point-bidding equalization over equal intervals")
    p.add_argument("--m", type=int, help="number of intervals (goods)")

    p = add("maximin", "contiguous split maximizing the worst share")
    p.add_argument("--keep-order", action="store_true",
                   help="assign pieces left to right in agent order")

    add("nash", "pure equilibria of the scenario game")

    p = add("path", "best-response improving path through the game")
    p.add_argument("--start", help="starting profile, e.g. E1/A1/S1")
    p.add_argument("--max-steps", type=int, default=64)

    add("curve", "payoffs along the one-dimensional split curve")
    add("proposals", "stated division proposals, annotated")

    p = add("plot-data", "write TSV series for plotting")
    p.add_argument("--kind", choices=PLOT_KINDS, required=True)
    return parser


# ---------------------------------------------------------------------------
# Shared rendering helpers
# ---------------------------------------------------------------------------

def _fairness_dict(rep: FairnessReport) -> dict:
    return {
        "agents": list(rep.agents),
        "values": [list(r) for r in rep.values],
        "proportional": list(rep.proportional),
        "envy": [list(r) for r in rep.envy],
        "envy_free": rep.envy_free,
        "equitable": rep.equitable,
        "utilitarian_total": rep.utilitarian_total,
        "tol": rep.tol,
    }


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _fairness_lines(rep: FairnessReport) -> list[str]:
    lines = ["value of each piece, by agent (rows) and holder (columns):"]
    headers = ["agent"] + [f"-> {a}" for a in rep.agents]
    rows = [[a] + [fmt_num(v) for v in rep.values[i]]
            for i, a in enumerate(rep.agents)]
    lines += table_lines(headers, rows)
    lines.append("")
    lines.append(f"proportional: {_yesno(all(rep.proportional))}"
                 f" | envy-free: {_yesno(rep.envy_free)}"
                 f" | equitable: {_yesno(rep.equitable)}")
    lines.append(f"utilitarian total: {fmt_num(rep.utilitarian_total)}")
    return lines


def _trace_lines(trace) -> list[str]:
    out = ["steps:"]
    for step in trace:
        if step.kind == "cut":
            out.append(f"  cut     {step.agent} at x = {fmt_num(step.x)}")
        elif step.kind == "trim":
            out.append(f"  trim    {step.agent} shortens piece {step.piece} "
                       f"by {fmt_num(step.amount)}")
        elif step.kind == "choose":
            out.append(f"  choose  {step.agent} takes piece {step.piece}")
        else:
            out.append(f"  move    good {step.good} "
                       f"fraction {fmt_num(step.fraction)} "
                       f"{step.giver} -> {step.receiver}")
    return out


def _payoff_table(scenario: Scenario, outcome: ProtocolOutcome,
                  scale: bool) -> list[str]:
    unit_col = f"value ({scenario.unit})" if scale else "points"
    headers = ["agent", "piece", "share", unit_col]
    rows = []
    for agent, pc, pay in zip(outcome.allocation.agents,
                              outcome.allocation.pieces, outcome.payoffs):
        absolute = pay * scenario.total if scale else pay
        share = fmt_num(pay) if scale else fmt_num(pay / 100.0)
        rows.append([agent, piece_label(pc), share, fmt_num(absolute)])
    return table_lines(headers, rows)


def _ordered_valuations(scenario: Scenario, first: str | None) -> list:
    if first is None:
        return list(scenario.valuations)
    if first not in scenario.agents:
        raise ValidationError(f"cutter {first!r} is not an agent id")
    rest = [v for a, v in zip(scenario.agents, scenario.valuations)
            if a != first]
    return [scenario.valuation_of(first)] + rest


def _audit_outcome(scenario: Scenario, outcome: ProtocolOutcome) -> FairnessReport:
    vals = [scenario.valuation_of(a) for a in outcome.allocation.agents]
    return audit(outcome.allocation, vals)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _run_protocol(scenario: Scenario, name: str | None,
                  cutter: str | None) -> tuple[str, ProtocolOutcome]:
    n = len(scenario.agents)
    if name is None:
        if n == 2:
            name = "cutchoose2"
        elif n == 3:
            name = "icyc"
        else:
            raise Unsupported(f"no default protocol for {n} agents")
    if name == "selfridge-conway":
        vals = _ordered_valuations(scenario, cutter)
        return name, selfridge_conway(vals)
    if name == "cutchoose2":
        return name, cut_and_choose_2(_ordered_valuations(scenario, cutter))
    chosen = cutter or scenario.default_cutter()
    if chosen not in scenario.agents:
        raise ValidationError(f"cutter {chosen!r} is not an agent id")
    return name, cut_and_choose_3(list(scenario.valuations), cutter=chosen,
                                  priority=scenario.priority)


def cmd_divide(scenario: Scenario, args) -> tuple[dict, list[str]]:
    name, outcome = _run_protocol(scenario, args.protocol, args.cutter)
    rep = _audit_outcome(scenario, outcome)
    result = {"protocol": name, **outcome_dict(outcome),
              "audit": _fairness_dict(rep)}
    lines = [f"protocol: {name} ({len(scenario.agents)} agents)"]
    lines += _payoff_table(scenario, outcome, scale=True)
    lines.append("")
    lines += _trace_lines(outcome.trace)
    lines.append("")
    lines.append(f"envy-free: {_yesno(rep.envy_free)}"
                 f" | proportional: {_yesno(all(rep.proportional))}"
                 f" | equitable: {_yesno(rep.equitable)}")
    return result, lines


def _parse_pieces(text: str, count: int):
    groups = [g for g in text.split(";")]
    if len(groups) != count:
        raise ArityMismatch(
            f"expected {count} pieces separated by ';', got {len(groups)}")
    pieces = []
    for g in groups:
        bounds = []
        for part in g.split("+"):
            nums = part.split(",")
            if len(nums) != 2:
                raise ValidationError(
                    f"piece segment {part!r} is not 'lo,hi'")
            try:
                bounds.append((float(nums[0]), float(nums[1])))
            except ValueError:
                raise ValidationError(
                    f"piece segment {part!r} is not numeric") from None
        pieces.append(piece(*bounds))
    return pieces


def cmd_audit(scenario: Scenario, args) -> tuple[dict, list[str]]:
    if args.pieces:
        pieces = _parse_pieces(args.pieces, len(scenario.agents))
        alloc = allocation(scenario.agents, pieces)
        rep = audit(alloc, list(scenario.valuations))
        source = "explicit"
    else:
        source, outcome = _run_protocol(scenario, args.protocol, args.cutter)
        alloc = outcome.allocation
        rep = _audit_outcome(scenario, outcome)
    check = validate_allocation(alloc)
    result = {
        "source": source,
        "allocation": allocation_dict(alloc),
        "partition": {"overlap_length": check.overlap_length,
                      "uncovered_length": check.uncovered_length,
                      "ok": check.ok},
        "audit": _fairness_dict(rep),
    }
    lines = [f"allocation source: {source}"]
    rows = [[a, piece_label(p)] for a, p in zip(alloc.agents, alloc.pieces)]
    lines += table_lines(["agent", "piece"], rows)
    lines.append("")
    if not check.ok:
        lines.append(f"partition check FAILED: overlap "
                     f"{fmt_num(check.overlap_length)}, uncovered "
                     f"{fmt_num(check.uncovered_length)}")
        lines.append("")
    lines += _fairness_lines(rep)
    return result, lines


def cmd_aw(scenario: Scenario, args) -> tuple[dict, list[str]]:
    m = args.m if args.m is not None else scenario.intervals
    if m < 1:
        raise ValidationError("interval count must be at least 1")
    cake = discretize(list(scenario.valuations), m)
    if len(scenario.agents) == 2:
        outcome = adjusted_winner_2(cake)
    else:
        outcome = adjusted_winner_n(cake)
    result = {"m": m, "bids": [list(r) for r in cake.bids],
              **outcome_dict(outcome)}
    lines = [f"bids over {m} equal intervals (100 points per agent):"]
    headers = ["agent"] + [f"g{j}" for j in range(m)]
    rows = [[a] + [fmt_num(b) for b in row]
            for a, row in zip(cake.agents, cake.bids)]
    lines += table_lines(headers, rows)
    lines.append("")
    lines += _payoff_table(scenario, outcome, scale=False)
    lines.append("")
    lines += _trace_lines(outcome.trace)
    meta = outcome.meta
    if meta.get("heuristic"):
        lines.append("")
        lines.append(f"heuristic equalization: spread "
                     f"{fmt_num(meta['spread'])}"
                     + (", stalled" if meta.get("stalled") else ""))
    elif meta.get("fractional_good") is not None:
        lines.append("")
        lines.append(f"fractional good: g{meta['fractional_good']}")
    return result, lines


def cmd_maximin(scenario: Scenario, args) -> tuple[dict, list[str]]:
    outcome = maximin_split(list(scenario.valuations),
                            assignment_search=not args.keep_order)
    rep = _audit_outcome(scenario, outcome)
    result = {**outcome_dict(outcome), "audit": _fairness_dict(rep)}
    meta = outcome.meta
    lines = [f"worst share: {fmt_num(meta['objective'])} "
             f"({fmt_num(meta['objective'] * scenario.total)} {scenario.unit})",
             "cuts at: " + ", ".join(fmt_num(c) for c in meta["cuts"]),
             "pieces left to right go to: " + ", ".join(meta["assignment"]),
             ""]
    lines += _payoff_table(scenario, outcome, scale=True)
    return result, lines


def _need_matrix(scenario: Scenario):
    if scenario.matrix is None:
        raise MissingSection("scenario has no [game.matrix] section")
    return scenario.matrix


def cmd_nash(scenario: Scenario, args) -> tuple[dict, list[str]]:
    m = _need_matrix(scenario)
    equilibria = sorted(pure_nash(m))
    labels = [m.label(p) for p in equilibria]
    result = {
        "players": list(m.players),
        "strategies": [list(s) for s in m.strategies],
        "payoffs": {m.label(p): list(m.payoffs[p]) for p in m.profiles()},
        "equilibria": labels,
    }
    lines = ["payoff matrix:"]
    headers = ["profile"] + list(m.players)
    rows = [[m.label(p)] + [fmt_num(x) for x in m.payoffs[p]]
            for p in m.profiles()]
    lines += table_lines(headers, rows)
    lines.append("")
    if labels:
        lines.append("pure equilibria: " + ", ".join(labels))
    else:
        lines.append("pure equilibria: none")
        br = {player: sorted(best_responses(m, m.profiles()[0], player))
              for player in m.players}
        first = m.label(m.profiles()[0])
        lines.append(f"best responses at {first}: "
                     + "; ".join(f"{p} -> {'/'.join(v)}"
                                 for p, v in br.items()))
    return result, lines


def cmd_path(scenario: Scenario, args) -> tuple[dict, list[str]]:
    m = _need_matrix(scenario)
    start = args.start if args.start else m.label(m.profiles()[0])
    path = improving_path(m, start, max_steps=args.max_steps)
    result = {
        "start": m.label(path.start),
        "status": path.status,
        "cycle_start": path.cycle_start,
        "steps": [{"player": s.player, "from": s.moved_from,
                   "to": s.moved_to, "profile": m.label(s.profile)}
                  for s in path.steps],
        "profiles": [m.label(p) for p in path.profiles],
    }
    lines = [f"start: {m.label(path.start)}"]
    for s in path.steps:
        lines.append(f"  {s.player}: {s.moved_from} -> {s.moved_to}"
                     f"  now at {m.label(s.profile)}")
    lines.append("")
    if path.status == "cycle":
        lines.append(f"status: cycle (returns to step {path.cycle_start})")
    elif path.status == "at-equilibrium":
        lines.append("status: reached a pure equilibrium")
    else:
        lines.append(f"status: stopped after {len(path.steps)} steps")
    return result, lines


def cmd_curve(scenario: Scenario, args) -> tuple[dict, list[str]]:
    if scenario.curve is None:
        raise MissingSection("scenario has no [game.curve] section")
    table = payoff_curve(scenario.curve)
    result = {
        "agents": list(table.agents),
        "shares": list(table.shares),
        "payoffs": [list(r) for r in table.payoffs],
        "monotonicity": list(table.monotonicity),
    }
    lines = ["payoff along the split curve:"]
    headers = ["share"] + list(table.agents)
    rows = [[fmt_num(table.shares[i])] + [fmt_num(x) for x in table.payoffs[i]]
            for i in range(len(table.shares))]
    lines += table_lines(headers, rows)
    lines.append("")
    lines.append("monotonicity: "
                 + ", ".join(f"{a} {m}" for a, m
                             in zip(table.agents, table.monotonicity)))
    return result, lines


def cmd_proposals(scenario: Scenario, args) -> tuple[dict, list[str]]:
    if scenario.proposals is None:
        raise MissingSection("scenario has no [game.proposals] section")
    annotated = proposal_table(scenario.proposals)
    result = {
        "agents": list(annotated.agents),
        "rows": [list(r) for r in annotated.rows],
        "favored": [list(f) for f in annotated.favored],
        "intensities": [list(r) for r in annotated.intensities],
        "total": annotated.total,
    }
    lines = ["stated proposals:"]
    headers = ["proposer"] + list(annotated.agents) + ["favored"]
    rows = []
    for i, agent in enumerate(annotated.agents):
        rows.append([agent] + [fmt_num(x) for x in annotated.rows[i]]
                    + [", ".join(annotated.favored[i])])
    lines += table_lines(headers, rows)
    return result, lines


_COMMANDS = {
    "divide": cmd_divide,
    "audit": cmd_audit,
    "aw": cmd_aw,
    "maximin": cmd_maximin,
    "nash": cmd_nash,
    "path": cmd_path,
    "curve": cmd_curve,
    "proposals": cmd_proposals,
}


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        scenario = load_scenario(args.scenario)
        if args.command == "plot-data":
            if not args.out:
                raise ValidationError("plot-data requires --out")
            _write(emit_plot_data(scenario, args.kind), args.out)
            return 0
        result, lines = _COMMANDS[args.command](scenario, args)
        if args.format == "machine":
            text = machine_text(scenario, args.command, result)
        else:
            text = human_text(scenario, args.command, lines)
        _write(text, args.out)
        return 0
    except ScenarioParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
