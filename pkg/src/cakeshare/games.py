"""Strategic-form game analysis: pure equilibrium enumeration, best
responses, deterministic improving paths, water-split payoff curves, and
proposal-table annotation.

Profiles are tuples of per-player strategy indices internally; strategy
labels (e.g. "E2") appear at the API edges and in reports, joined with "/"
into profile keys like "E2/A1/S1".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (BadRowSum, DuplicateAgent, UnknownPlayer,
                     UnknownStrategy, ValidationError)

MONO_TOL = 1e-12


@dataclass(frozen=True)
class PayoffMatrix:
    players: tuple[str, ...]
    strategies: tuple[tuple[str, ...], ...]
    payoffs: dict[tuple[int, ...], tuple[float, ...]]

    def __post_init__(self) -> None:
        n = len(self.players)
        if len(set(self.players)) != n:
            raise DuplicateAgent(f"repeated player in {self.players}")
        if len(self.strategies) != n:
            raise ValidationError("one strategy list per player required")
        for p, labels in zip(self.players, self.strategies):
            if not labels:
                raise ValidationError(f"player {p}: empty strategy set")
            if len(set(labels)) != len(labels):
                raise ValidationError(f"player {p}: repeated strategy label")
        space = list(itertools.product(*(range(len(s)) for s in self.strategies)))
        if set(self.payoffs) != set(space):
            raise ValidationError(
                f"payoffs must cover all {len(space)} profiles exactly")
        for profile, vec in self.payoffs.items():
            if len(vec) != n:
                raise ValidationError(
                    f"profile {self.label(profile)}: payoff vector has "
                    f"{len(vec)} entries, expected {n}")

    def label(self, profile: tuple[int, ...]) -> str:
        return "/".join(self.strategies[i][s] for i, s in enumerate(profile))

    def parse(self, key: str) -> tuple[int, ...]:
        parts = key.split("/")
        if len(parts) != len(self.players):
            raise ValidationError(
                f"profile key {key!r} must have {len(self.players)} parts")
        return tuple(self._strategy_index(i, lab) for i, lab in enumerate(parts))

    def player_index(self, player: str) -> int:
        try:
            return self.players.index(player)
        except ValueError:
            raise UnknownPlayer(f"no player {player!r} in {self.players}") from None

    def _strategy_index(self, player_i: int, label: str) -> int:
        try:
            return self.strategies[player_i].index(label)
        except ValueError:
            raise UnknownStrategy(
                f"player {self.players[player_i]} has no strategy {label!r}"
            ) from None

    def profiles(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(len(s)) for s in self.strategies)))


def _as_indices(m: PayoffMatrix, profile) -> tuple[int, ...]:
    if isinstance(profile, str):
        return m.parse(profile)
    if len(profile) != len(m.players):
        raise ValidationError(
            f"profile {profile!r} must have {len(m.players)} entries")
    out = []
    for i, s in enumerate(profile):
        if isinstance(s, str):
            out.append(m._strategy_index(i, s))
        elif isinstance(s, int) and 0 <= s < len(m.strategies[i]):
            out.append(s)
        else:
            raise UnknownStrategy(
                f"player {m.players[i]} has no strategy {s!r}")
    return tuple(out)


def _best_payoff(m: PayoffMatrix, profile: tuple[int, ...], player_i: int) -> float:
    return max(
        m.payoffs[profile[:player_i] + (s,) + profile[player_i + 1:]][player_i]
        for s in range(len(m.strategies[player_i])))


def pure_nash(m: PayoffMatrix) -> set[tuple[int, ...]]:
    """All profiles where no player has a strictly improving deviation.

    Best payoffs per (player, opponents' context) are computed once; a
    profile is an equilibrium when every player already attains theirs.
    """
    best: dict[tuple[int, tuple[int, ...]], float] = {}
    for profile, vec in m.payoffs.items():
        for i in range(len(m.players)):
            ctx = (i, profile[:i] + profile[i + 1:])
            if ctx not in best or vec[i] > best[ctx]:
                best[ctx] = vec[i]
    return {
        profile for profile, vec in m.payoffs.items()
        if all(vec[i] >= best[(i, profile[:i] + profile[i + 1:])]
               for i in range(len(m.players)))}


def best_responses(m: PayoffMatrix, profile, player: str) -> set[str]:
    """Argmax strategies for one player with the others held fixed."""
    i = m.player_index(player)
    prof = _as_indices(m, profile)
    top = _best_payoff(m, prof, i)
    return {
        m.strategies[i][s] for s in range(len(m.strategies[i]))
        if m.payoffs[prof[:i] + (s,) + prof[i + 1:]][i] >= top}


@dataclass(frozen=True)
class PathStep:
    player: str
    moved_from: str
    moved_to: str
    profile: tuple[int, ...]


@dataclass(frozen=True)
class ImprovingPath:
    start: tuple[int, ...]
    steps: tuple[PathStep, ...]
    status: str  # at-equilibrium | cycle | max-steps
    cycle_start: int | None  # index into the profile sequence, for cycles

    @property
    def profiles(self) -> tuple[tuple[int, ...], ...]:
        return (self.start,) + tuple(s.profile for s in self.steps)


def improving_path(m: PayoffMatrix, start, max_steps: int = 64) -> ImprovingPath:
    """Follow strict best-response dynamics from a profile.

    Each step, the first player (in matrix order) with a strictly better
    reply switches to its best response, lowest strategy index on ties.
    Stops at a profile with no improving player (at-equilibrium), at a
    profile already visited (cycle), or after max_steps.
    """
    if max_steps < 1:
        raise ValidationError("max_steps must be at least 1")
    origin = _as_indices(m, start)
    profile = origin
    seen = {origin: 0}
    steps: list[PathStep] = []
    for _ in range(max_steps):
        mover = None
        top = 0.0
        for i in range(len(m.players)):
            cur = m.payoffs[profile][i]
            top = _best_payoff(m, profile, i)
            if top > cur:
                mover = i
                break
        if mover is None:
            return ImprovingPath(origin, tuple(steps), "at-equilibrium", None)
        i = mover
        options = [s for s in range(len(m.strategies[i]))
                   if m.payoffs[profile[:i] + (s,) + profile[i + 1:]][i] >= top]
        nxt = profile[:i] + (min(options),) + profile[i + 1:]
        steps.append(PathStep(
            player=m.players[i],
            moved_from=m.strategies[i][profile[i]],
            moved_to=m.strategies[i][min(options)],
            profile=nxt))
        if nxt in seen:
            return ImprovingPath(origin, tuple(steps), "cycle", seen[nxt])
        seen[nxt] = len(steps)
        profile = nxt
    return ImprovingPath(origin, tuple(steps), "max-steps", None)


@dataclass(frozen=True)
class WaterSplitCurve:
    """Per-agent affine payoffs as a function of the upstream share."""

    agents: tuple[str, ...]
    coeffs: tuple[tuple[float, float], ...]  # (intercept, slope) per agent
    total: float = 100.0
    step: float = 1.0

    def __post_init__(self) -> None:
        if len(set(self.agents)) != len(self.agents):
            raise DuplicateAgent(f"repeated agent in {self.agents}")
        if len(self.coeffs) != len(self.agents):
            raise ValidationError("one (intercept, slope) pair per agent")
        if self.total <= 0.0 or self.step <= 0.0:
            raise ValidationError("total and step must be positive")


@dataclass(frozen=True)
class CurveTable:
    agents: tuple[str, ...]
    shares: tuple[float, ...]
    payoffs: tuple[tuple[float, ...], ...]  # one row per share
    monotonicity: tuple[str, ...]  # nondecreasing | nonincreasing | constant | neither


def payoff_curve(c: WaterSplitCurve) -> CurveTable:
    """Evaluate the curve on its share grid and classify each agent's shape."""
    count = int(round(c.total / c.step))
    shares = tuple(min(c.total, k * c.step) for k in range(count + 1))
    rows = tuple(
        tuple(b + a * s for b, a in c.coeffs) for s in shares)
    flags = []
    for j in range(len(c.agents)):
        col = [row[j] for row in rows]
        diffs = [y - x for x, y in zip(col, col[1:])]
        nondec = all(d >= -MONO_TOL for d in diffs)
        noninc = all(d <= MONO_TOL for d in diffs)
        if nondec and noninc:
            flags.append("constant")
        elif nondec:
            flags.append("nondecreasing")
        elif noninc:
            flags.append("nonincreasing")
        else:
            flags.append("neither")
    return CurveTable(agents=c.agents, shares=shares, payoffs=rows,
                      monotonicity=tuple(flags))


@dataclass(frozen=True)
class ProposalTable:
    """rows[i][j] is what agent i proposes to give agent j."""

    agents: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    total: float = 100.0


@dataclass(frozen=True)
class AnnotatedProposals:
    agents: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    favored: tuple[tuple[str, ...], ...]  # per row: argmax receivers, ties kept
    intensities: tuple[tuple[float, ...], ...]
    total: float


def proposal_table(t: ProposalTable) -> AnnotatedProposals:
    """Annotate each proposal row with its favored receiver(s) and
    normalized intensities for plotting."""
    n = len(t.agents)
    if len(set(t.agents)) != n:
        raise DuplicateAgent(f"repeated agent in {t.agents}")
    if len(t.rows) != n:
        raise ValidationError("one proposal row per agent required")
    for agent, row in zip(t.agents, t.rows):
        if len(row) != n:
            raise ValidationError(f"agent {agent}: ragged proposal row")
        if abs(sum(row) - t.total) > 1e-9:
            raise BadRowSum(
                f"agent {agent}: proposals sum to {sum(row)!r}, "
                f"expected {t.total}")
    favored = []
    for row in t.rows:
        top = max(row)
        favored.append(tuple(t.agents[j] for j, v in enumerate(row) if v == top))
    intensities = tuple(tuple(v / t.total for v in row) for row in t.rows)
    return AnnotatedProposals(agents=t.agents, rows=t.rows,
                              favored=tuple(favored),
                              intensities=intensities, total=t.total)
