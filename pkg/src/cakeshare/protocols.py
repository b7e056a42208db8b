"""Division procedures: cut-and-choose, trim-based envy-free division,
point-bidding equalization, and contiguous maximin search.

Every procedure returns a :class:`ProtocolOutcome` holding the allocation,
per-agent payoffs, and a replayable trace.  Payoffs are own-valuation
measures for the continuous procedures and own-bid point totals (out of
100) for the bidding procedures.  :func:`replay_trace` re-executes a trace
and must rebuild the identical allocation; the protocols therefore only
ever act through the four step kinds below.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .cake import Allocation, Piece, canonicalize
from .errors import (DuplicateAgent, Unsupported, ValidationError, WrongArity)
from .valuation import Valuation, cumulative, cut_point, inverse_cumulative, measure

# Chooser indifference threshold and envy guarantee scale.
TIE_TOL = 1e-9
# Point-bidding totals must balance to this many points.
POINT_TOL = 1e-9
# Heuristic n-party equalization stops at this spread (in points).
SPREAD_TOL = 1e-6

REFEREE = "referee"


@dataclass(frozen=True)
class CutStep:
    agent: str
    x: float
    kind: str = field(default="cut", init=False)


@dataclass(frozen=True)
class TrimStep:
    """Width ``amount`` removed from the right end of piece ``piece``."""

    agent: str
    piece: int
    amount: float
    kind: str = field(default="trim", init=False)


@dataclass(frozen=True)
class ChooseStep:
    agent: str
    piece: int
    kind: str = field(default="choose", init=False)


@dataclass(frozen=True)
class TransferStep:
    good: int
    fraction: float
    giver: str
    receiver: str
    kind: str = field(default="transfer", init=False)


TraceStep = CutStep | TrimStep | ChooseStep | TransferStep


@dataclass(frozen=True)
class ProtocolOutcome:
    allocation: Allocation
    payoffs: tuple[float, ...]
    trace: tuple[TraceStep, ...]
    meta: dict = field(default_factory=dict)


@dataclass(frozen=True)
class DiscreteCake:
    """m goods bid on by each agent; every row totals 100 points."""

    agents: tuple[str, ...]
    bids: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.agents)) != len(self.agents):
            raise DuplicateAgent(f"repeated agent in {self.agents}")
        if len(self.bids) != len(self.agents):
            raise ValidationError("one bid row per agent required")
        m = len(self.bids[0]) if self.bids else 0
        for agent, row in zip(self.agents, self.bids):
            if len(row) != m:
                raise ValidationError(f"agent {agent}: ragged bid row")
            if any(b < 0.0 for b in row):
                raise ValidationError(f"agent {agent}: negative bid")
            if abs(sum(row) - 100.0) > POINT_TOL:
                raise ValidationError(
                    f"agent {agent}: bids sum to {sum(row)!r}, expected 100")

    @property
    def num_goods(self) -> int:
        return len(self.bids[0])


def _names(valuations: list[Valuation], fallback: str = "agent") -> list[str]:
    names = [v.label or f"{fallback}-{i + 1}" for i, v in enumerate(valuations)]
    if len(set(names)) != len(names):
        raise DuplicateAgent(f"agent labels must be distinct, got {names}")
    return names


def _argmax(values: list[float]) -> int:
    """Lowest index attaining the maximum (indifference breaks leftward)."""
    best = max(values)
    return min(i for i, v in enumerate(values) if v == best)


# ---------------------------------------------------------------------------
# Cut and choose
# ---------------------------------------------------------------------------

def cut_and_choose_2(valuations: list[Valuation]) -> ProtocolOutcome:
    """First agent cuts at own median; second takes its preferred half.

    An exact half tie sends the chooser left.  The cutter's payoff is 1/2
    under its own measure by construction.
    """
    if len(valuations) != 2:
        raise WrongArity("cut_and_choose_2 requires exactly two valuations")
    cutter_v, chooser_v = valuations
    cutter, chooser = _names(valuations)
    x = inverse_cumulative(cutter_v, 0.5)
    halves = [(0.0, x), (x, 1.0)]
    vals = [measure(chooser_v, h) for h in halves]
    take = 0 if vals[0] >= vals[1] else 1
    trace = (CutStep(cutter, x), ChooseStep(chooser, take),
             ChooseStep(cutter, 1 - take))
    pieces = {chooser: halves[take], cutter: halves[1 - take]}
    alloc = Allocation(
        agents=(cutter, chooser),
        pieces=(canonicalize([pieces[cutter]]), canonicalize([pieces[chooser]])))
    payoffs = (measure(cutter_v, alloc.pieces[0]), measure(chooser_v, alloc.pieces[1]))
    return ProtocolOutcome(allocation=alloc, payoffs=payoffs, trace=trace)


def cut_and_choose_3(valuations: list[Valuation], cutter: str,
                     priority: tuple[str, str] | None = None) -> ProtocolOutcome:
    """Cutter trisects at own thirds; choosers pick, conflicts go by priority.

    Both choosers name their favourite piece under their own measure
    (indifference breaks to the lower index).  If they collide, the priority
    chooser is served and the other takes its best remaining piece.  The
    cutter receives the leftover and values it exactly 1/3.
    """
    if len(valuations) != 3:
        raise WrongArity("cut_and_choose_3 requires exactly three valuations")
    names = _names(valuations)
    if cutter not in names:
        raise ValidationError(f"cutter {cutter!r} is not one of {names}")
    choosers = [n for n in names if n != cutter]
    if priority is None:
        priority = tuple(choosers)
    if sorted(priority) != sorted(choosers):
        raise DuplicateAgent(
            f"chooser priority {priority} must name {choosers} exactly")
    byname = dict(zip(names, valuations))

    cv = byname[cutter]
    x1 = inverse_cumulative(cv, 1.0 / 3.0)
    x2 = max(x1, inverse_cumulative(cv, 2.0 / 3.0))
    bounds = [(0.0, x1), (x1, x2), (x2, 1.0)]

    prefs = {c: _argmax([measure(byname[c], b) for b in bounds]) for c in priority}
    taken: dict[str, int] = {}
    first, second = priority
    taken[first] = prefs[first]
    if prefs[second] != prefs[first]:
        taken[second] = prefs[second]
    else:
        rest = [k for k in range(3) if k != prefs[first]]
        vals = [measure(byname[second], bounds[k]) for k in rest]
        taken[second] = rest[_argmax(vals)]
    taken[cutter] = ({0, 1, 2} - set(taken.values())).pop()

    trace = (CutStep(cutter, x1), CutStep(cutter, x2),
             ChooseStep(first, taken[first]), ChooseStep(second, taken[second]),
             ChooseStep(cutter, taken[cutter]))
    alloc = Allocation(
        agents=tuple(names),
        pieces=tuple(canonicalize([bounds[taken[n]]]) for n in names))
    payoffs = tuple(measure(byname[n], alloc.pieces[i])
                    for i, n in enumerate(names))
    return ProtocolOutcome(allocation=alloc, payoffs=payoffs, trace=trace)


# ---------------------------------------------------------------------------
# Trim-based three-agent envy-free division
# ---------------------------------------------------------------------------

def selfridge_conway(valuations: list[Valuation]) -> ProtocolOutcome:
    """Two-phase trim procedure; envy-free to 1e-9 for three agents.

    Roles follow input order: the first agent divides, the second trims,
    the third chooses first.  Phase one: the divider trisects by own
    measure; the trimmer cuts its largest piece down to tie its second
    largest (skipped when already tied within 1e-9), and the three pieces
    are chosen in the order third agent, second (obliged to take the
    trimmed piece when still available), first.  Phase two divides the
    trimmings: whichever of the second and third agents did not take the
    trimmed piece trisects them by own measure, and sub-pieces are chosen
    by the trimmed-piece holder, the divider, then the trisector.
    """
    if len(valuations) != 3:
        raise WrongArity("selfridge_conway requires exactly three valuations")
    names = _names(valuations)
    v1, v2, v3 = valuations
    n1, n2, n3 = names

    x1 = inverse_cumulative(v1, 1.0 / 3.0)
    x2 = max(x1, inverse_cumulative(v1, 2.0 / 3.0))
    bounds = [(0.0, x1), (x1, x2), (x2, 1.0)]
    trace: list[TraceStep] = [CutStep(n1, x1), CutStep(n1, x2)]

    m2 = [measure(v2, b) for b in bounds]
    order = sorted(range(3), key=lambda k: (-m2[k], k))
    jmax, second_val = order[0], m2[order[1]]
    trimmed: int | None = None
    reserve: tuple[float, float] | None = None
    if m2[jmax] - second_val > TIE_TOL:
        lo, hi = bounds[jmax]
        y = min(hi, cut_point(v2, lo, second_val))
        bounds[jmax] = (lo, y)
        reserve = (y, hi)
        trimmed = jmax
        trace.append(TrimStep(n2, jmax, hi - y))

    m3 = [measure(v3, b) for b in bounds]
    c3 = _argmax(m3)
    if trimmed is not None and c3 != trimmed:
        c2 = trimmed  # obliged: the trimmer must take the piece it cut
    else:
        rest = [k for k in range(3) if k != c3]
        c2 = rest[_argmax([measure(v2, bounds[k]) for k in rest])]
    c1 = ({0, 1, 2} - {c3, c2}).pop()
    trace += [ChooseStep(n3, c3), ChooseStep(n2, c2), ChooseStep(n1, c1)]

    main = {n1: bounds[c1], n2: bounds[c2], n3: bounds[c3]}
    extras: dict[str, tuple[float, float]] = {}
    if reserve is not None:
        holder, trisector = (n2, n3) if c2 == trimmed else (n3, n2)
        vt = v3 if trisector == n3 else v2
        vh = v2 if holder == n2 else v3
        lo, hi = reserve
        tmass = measure(vt, reserve)
        z1 = min(hi, cut_point(vt, lo, tmass / 3.0))
        z2 = min(hi, max(z1, cut_point(vt, lo, 2.0 * tmass / 3.0)))
        subs = [(lo, z1), (z1, z2), (z2, hi)]
        trace += [CutStep(trisector, z1), CutStep(trisector, z2)]

        sh = _argmax([measure(vh, s) for s in subs])
        rest = [k for k in range(3) if k != sh]
        s1 = rest[_argmax([measure(v1, subs[k]) for k in rest])]
        st = ({0, 1, 2} - {sh, s1}).pop()
        trace += [ChooseStep(holder, sh), ChooseStep(n1, s1),
                  ChooseStep(trisector, st)]
        extras[holder] = subs[sh]
        extras[n1] = subs[s1]
        extras[trisector] = subs[st]

    pieces = []
    for n in names:
        parts = [main[n]] + ([extras[n]] if n in extras else [])
        pieces.append(canonicalize(parts))
    alloc = Allocation(agents=tuple(names), pieces=tuple(pieces))
    payoffs = tuple(measure(v, p) for v, p in zip(valuations, alloc.pieces))
    return ProtocolOutcome(allocation=alloc, payoffs=payoffs, trace=tuple(trace))


# ---------------------------------------------------------------------------
# Point bidding
# ---------------------------------------------------------------------------

def discretize(valuations: list[Valuation], m: int) -> DiscreteCake:
    """Bid 100 times the measure of each of m equal-width intervals."""
    if m < 1:
        raise ValidationError("at least one interval required")
    names = _names(valuations)
    rows = []
    for v in valuations:
        row = [100.0 * measure(v, (k / m, (k + 1) / m)) for k in range(m)]
        rows.append(tuple(row))
    return DiscreteCake(agents=tuple(names), bids=tuple(rows))


def _initial_assignment(cake: DiscreteCake) -> tuple[list[int], list[float], list[TraceStep]]:
    n = len(cake.agents)
    totals = [0.0] * n
    owner: list[int] = []
    trace: list[TraceStep] = []
    for g in range(cake.num_goods):
        best = max(cake.bids[i][g] for i in range(n))
        cand = [i for i in range(n) if cake.bids[i][g] == best]
        cand.sort(key=lambda i: (totals[i], i))
        w = cand[0]
        owner.append(w)
        totals[w] += cake.bids[w][g]
        trace.append(ChooseStep(cake.agents[w], g))
    return owner, totals, trace


def _goods_allocation(agents: tuple[str, ...], num_goods: int,
                      share: list[list[float]]) -> Allocation:
    """Goods map to equal-width intervals; fractional owners split a good's
    interval left to right in agent order."""
    spans: list[list[tuple[float, float]]] = [[] for _ in agents]
    for g in range(num_goods):
        lo = g / num_goods
        width = 1.0 / num_goods
        pos = lo
        for i in range(len(agents)):
            f = share[i][g]
            if f > 0.0:
                nxt = min(lo + width, pos + f * width)
                spans[i].append((pos, nxt))
                pos = nxt
    return Allocation(agents=agents,
                      pieces=tuple(canonicalize(s) for s in spans))


def adjusted_winner_2(cake: DiscreteCake) -> ProtocolOutcome:
    """Two-party point equalization with at most one fractional good.

    Goods go first to the stricter bidder (ties to the agent with the lower
    running total, then the lower index).  The richer agent then hands
    goods to the poorer in increasing order of winner/loser bid ratio,
    splitting the final good fractionally so both point totals match to
    1e-9.  Equitable and envy-free under the bids.
    """
    if len(cake.agents) != 2:
        raise WrongArity("adjusted_winner_2 requires exactly two agents")
    owner, totals, trace = _initial_assignment(cake)
    share = [[1.0 if owner[g] == i else 0.0 for g in range(cake.num_goods)]
             for i in range(2)]
    fractional: int | None = None
    while totals[0] - totals[1] > POINT_TOL or totals[1] - totals[0] > POINT_TOL:
        rich = 0 if totals[0] > totals[1] else 1
        poor = 1 - rich
        movable = [g for g in range(cake.num_goods)
                   if share[rich][g] == 1.0
                   and cake.bids[rich][g] + cake.bids[poor][g] > 0.0]
        if not movable:
            break
        movable.sort(key=lambda g: (
            cake.bids[rich][g] / cake.bids[poor][g]
            if cake.bids[poor][g] > 0.0 else math.inf, g))
        g = movable[0]
        br, bp = cake.bids[rich][g], cake.bids[poor][g]
        f = (totals[rich] - totals[poor]) / (br + bp)
        if f >= 1.0:
            f = 1.0
        else:
            fractional = g
        share[rich][g] -= f
        share[poor][g] += f
        totals[rich] -= f * br
        totals[poor] += f * bp
        trace.append(TransferStep(g, f, cake.agents[rich], cake.agents[poor]))
        if f < 1.0:
            break
    alloc = _goods_allocation(cake.agents, cake.num_goods, share)
    return ProtocolOutcome(
        allocation=alloc, payoffs=tuple(totals), trace=tuple(trace),
        meta={"fractional_good": fractional})


def adjusted_winner_n(cake: DiscreteCake) -> ProtocolOutcome:
    """Spread-chasing extension of point equalization to three or more agents.

    Repeatedly moves value from the current maximum-total agent to the
    current minimum-total agent along that pair's smallest bid-ratio good,
    fractionally, until the spread drops to 1e-6 points or no single
    transfer strictly reduces it.  A heuristic: unlike the two-party
    procedure it guarantees neither envy-freeness nor a single fractional
    good, and the outcome is flagged accordingly.
    """
    if len(cake.agents) < 3:
        raise WrongArity("adjusted_winner_n requires at least three agents")
    n = len(cake.agents)
    owner, totals, trace = _initial_assignment(cake)
    share = [[1.0 if owner[g] == i else 0.0 for g in range(cake.num_goods)]
             for i in range(n)]
    guard = 0
    stalled = False
    while max(totals) - min(totals) > SPREAD_TOL:
        guard += 1
        if guard > 100_000:
            stalled = True
            break
        spread = max(totals) - min(totals)
        rich = min(range(n), key=lambda i: (-totals[i], i))
        poor = min(range(n), key=lambda i: (totals[i], i))
        movable = [g for g in range(cake.num_goods)
                   if share[rich][g] > 0.0
                   and cake.bids[rich][g] + cake.bids[poor][g] > 0.0]
        movable.sort(key=lambda g: (
            cake.bids[rich][g] / cake.bids[poor][g]
            if cake.bids[poor][g] > 0.0 else math.inf, g))
        applied = False
        for g in movable:
            br, bp = cake.bids[rich][g], cake.bids[poor][g]
            f = min(share[rich][g], (totals[rich] - totals[poor]) / (br + bp))
            if f <= 0.0:
                continue
            new_rich = totals[rich] - f * br
            new_poor = totals[poor] + f * bp
            trial = list(totals)
            trial[rich], trial[poor] = new_rich, new_poor
            if max(trial) - min(trial) >= spread:
                continue
            share[rich][g] -= f
            share[poor][g] += f
            totals[rich], totals[poor] = new_rich, new_poor
            trace.append(TransferStep(g, f, cake.agents[rich], cake.agents[poor]))
            applied = True
            break
        if not applied:
            stalled = True
            break
    alloc = _goods_allocation(cake.agents, cake.num_goods, share)
    return ProtocolOutcome(
        allocation=alloc, payoffs=tuple(totals), trace=tuple(trace),
        meta={"heuristic": True, "stalled": stalled,
              "spread": max(totals) - min(totals)})


# ---------------------------------------------------------------------------
# Contiguous maximin
# ---------------------------------------------------------------------------

GRID_POINTS = 401
DESCENT_STEP = 1e-7


def _piece_values(valuations, edges):
    return [[measure(v, (edges[k], edges[k + 1])) for k in range(len(edges) - 1)]
            for v in valuations]


def _line_max(lo: float, hi: float, rising, falling) -> float:
    """Argmax of min(rising, falling) on [lo, hi] for monotone arguments."""
    if rising(hi) <= falling(hi):
        return hi
    if rising(lo) >= falling(lo):
        return lo
    a, b = lo, hi
    for _ in range(60):
        if b - a <= DESCENT_STEP / 8.0:
            break
        mid = 0.5 * (a + b)
        if rising(mid) >= falling(mid):
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)


def maximin_split(valuations: list[Valuation],
                  assignment_search: bool = True) -> ProtocolOutcome:
    """Contiguous split maximizing the worst own-measure payoff.

    Two or three agents; each receives one interval.  A 401-point grid per
    cut seeds a coordinate-wise exact line search (each pass re-balances
    one cut against its two neighbouring pieces) run to step 1e-7, for
    every receiving order when ``assignment_search`` is on, else for the
    left-to-right input order only.
    """
    n = len(valuations)
    if n not in (2, 3):
        raise Unsupported(f"contiguous maximin supports 2 or 3 agents, got {n}")
    names = _names(valuations)
    perms = (list(itertools.permutations(range(n))) if assignment_search
             else [tuple(range(n))])
    grid = np.linspace(0.0, 1.0, GRID_POINTS)
    cums = [np.array([cumulative(v, float(x)) for x in grid]) for v in valuations]

    best = None  # (objective, perm, cuts)
    for perm in perms:
        if n == 2:
            a, b = perm
            worst = np.minimum(cums[a], 1.0 - cums[b])
            i = int(np.argmax(worst))
            cuts = [float(grid[i])]
        else:
            a, b, c = perm
            best_v, cuts = -1.0, [0.0, 0.0]
            for i in range(GRID_POINTS):
                mid = cums[b][i:] - cums[b][i]
                right = 1.0 - cums[c][i:]
                worst = np.minimum(np.minimum(mid, right), cums[a][i])
                j = int(np.argmax(worst))
                if worst[j] > best_v:
                    best_v = float(worst[j])
                    cuts = [float(grid[i]), float(grid[i + j])]
        cuts = _refine(valuations, perm, cuts)
        edges = [0.0] + cuts + [1.0]
        vals = _piece_values(valuations, edges)
        obj = min(vals[perm[k]][k] for k in range(n))
        if best is None or obj > best[0]:
            best = (obj, perm, cuts)

    obj, perm, cuts = best
    edges = [0.0] + cuts + [1.0]
    trace: list[TraceStep] = [CutStep(REFEREE, x) for x in cuts]
    piece_of: dict[str, tuple[float, float]] = {}
    for k in range(n):
        agent = names[perm[k]]
        piece_of[agent] = (edges[k], edges[k + 1])
        trace.append(ChooseStep(agent, k))
    alloc = Allocation(agents=tuple(names),
                       pieces=tuple(canonicalize([piece_of[a]]) for a in names))
    payoffs = tuple(measure(v, p) for v, p in zip(valuations, alloc.pieces))
    return ProtocolOutcome(
        allocation=alloc, payoffs=payoffs, trace=tuple(trace),
        meta={"objective": obj, "cuts": list(cuts),
              "assignment": [names[perm[k]] for k in range(n)]})


def _refine(valuations, perm, cuts) -> list[float]:
    n = len(valuations)
    if n == 2:
        a, b = perm
        x = _line_max(0.0, 1.0,
                      lambda t: cumulative(valuations[a], t),
                      lambda t: 1.0 - cumulative(valuations[b], t))
        return [x]
    a, b, c = perm
    va, vb, vc = valuations[a], valuations[b], valuations[c]
    x1, x2 = cuts
    for _ in range(200):
        nx1 = _line_max(0.0, x2,
                        lambda t: cumulative(va, t),
                        lambda t: cumulative(vb, x2) - cumulative(vb, t))
        nx2 = _line_max(nx1, 1.0,
                        lambda t: cumulative(vb, t) - cumulative(vb, nx1),
                        lambda t: 1.0 - cumulative(vc, t))
        moved = max(abs(nx1 - x1), abs(nx2 - x2))
        x1, x2 = nx1, nx2
        if moved <= DESCENT_STEP:
            break
    return [x1, x2]


# ---------------------------------------------------------------------------
# Trace replay
# ---------------------------------------------------------------------------

def replay_trace(trace: tuple[TraceStep, ...], agents: tuple[str, ...],
                 num_goods: int | None = None) -> Allocation:
    """Re-execute a trace and rebuild the allocation it produced.

    Continuous traces run a board machine: cuts partition the active board,
    a trim shortens one piece and sets the cut-off part aside as the next
    board, and chooses hand pieces to agents.  Traces containing transfers
    (or a ``num_goods`` hint) replay in the goods regime instead.
    """
    discrete = num_goods is not None or any(isinstance(s, TransferStep)
                                            for s in trace)
    if discrete:
        return _replay_goods(trace, agents, num_goods)

    spans: dict[str, list[tuple[float, float]]] = {a: [] for a in agents}
    board = {"lo": 0.0, "hi": 1.0, "cuts": [], "pieces": None, "taken": 0}
    reserve: tuple[float, float] | None = None

    def freeze() -> None:
        if board["pieces"] is None:
            edges = [board["lo"]] + sorted(board["cuts"]) + [board["hi"]]
            board["pieces"] = [[edges[k], edges[k + 1], False]
                               for k in range(len(edges) - 1)]

    for step in trace:
        if isinstance(step, CutStep):
            if board["pieces"] is not None:
                if any(not taken for _, _, taken in board["pieces"]) or reserve is None:
                    raise ValidationError("cut after choosing began on this board")
                board = {"lo": reserve[0], "hi": reserve[1], "cuts": [],
                         "pieces": None, "taken": 0}
                reserve = None
            board["cuts"].append(step.x)
        elif isinstance(step, TrimStep):
            freeze()
            _, hi, taken = board["pieces"][step.piece]
            if taken:
                raise ValidationError("trim of an already chosen piece")
            board["pieces"][step.piece][1] = hi - step.amount
            reserve = (hi - step.amount, hi)
        elif isinstance(step, ChooseStep):
            freeze()
            lo, hi, taken = board["pieces"][step.piece]
            if taken:
                raise ValidationError(f"piece {step.piece} chosen twice")
            if step.agent not in spans:
                raise ValidationError(f"unknown agent {step.agent!r} in trace")
            board["pieces"][step.piece][2] = True
            spans[step.agent].append((lo, hi))
        else:
            raise ValidationError("transfer step in a continuous trace")
    return Allocation(agents=tuple(agents),
                      pieces=tuple(canonicalize(spans[a]) for a in agents))


def _replay_goods(trace, agents, num_goods) -> Allocation:
    if num_goods is None:
        num_goods = 1 + max(
            [s.piece for s in trace if isinstance(s, ChooseStep)]
            + [s.good for s in trace if isinstance(s, TransferStep)])
    index = {a: i for i, a in enumerate(agents)}
    share = [[0.0] * num_goods for _ in agents]
    for step in trace:
        if isinstance(step, ChooseStep):
            share[index[step.agent]][step.piece] = 1.0
        elif isinstance(step, TransferStep):
            f = step.fraction
            share[index[step.giver]][step.good] -= f
            share[index[step.receiver]][step.good] += f
        else:
            raise ValidationError("cut/trim steps do not appear in goods traces")
    return _goods_allocation(tuple(agents), num_goods, share)
