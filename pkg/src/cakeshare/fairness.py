"""Fairness audits for allocations and exhaustive searches over small
discrete instances for divisions that are efficient, envy-free, and
equitable all at once.

The audit side is pure measurement: given an allocation and one valuation
per agent, report proportionality, the full envy matrix, equitability, and
the utilitarian total.  The search side works on matrices of good values
and enumerates every whole-good assignment plus every assignment with a
single good split between two agents at hundredth fractions; efficiency is
judged within that enumerated space only, and reports say so.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cake import Allocation
from .errors import ArityMismatch, TooLarge, ValidationError
from .valuation import Valuation, measure

FAIR_TOL = 1e-9
# Equitability comparisons in the discrete search use a looser tolerance
# because split fractions are locked to the hundredths grid.
EQ_SEARCH_TOL = 1e-6
DOM_EPS = 1e-12
FRACTION_STEPS = 100
MAX_ASSIGNMENTS = 2_000_000
MAX_CANDIDATES = 250_000

PROPERTY_NAMES = ("efficient", "envy-free", "equitable")


@dataclass(frozen=True)
class FairnessReport:
    """values[i][j] is agent i's measure of agent j's piece."""

    agents: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]
    proportional: tuple[bool, ...]
    envy: tuple[tuple[float, ...], ...]
    envy_free: bool
    equitable: bool
    utilitarian_total: float
    tol: float = FAIR_TOL


def audit(allocation: Allocation, valuations: list[Valuation]) -> FairnessReport:
    """Score an allocation against each agent's own valuation.

    Valuations pair with allocation agents positionally.  The envy entry
    (i, j) is v_i(piece_j) − v_i(piece_i); a positive entry above tol means
    agent i prefers agent j's piece.
    """
    n = len(allocation.agents)
    if len(valuations) != n:
        raise ArityMismatch(
            f"{n} agents but {len(valuations)} valuations")
    vals = [[measure(v, p) for p in allocation.pieces] for v in valuations]
    envy = [[vals[i][j] - vals[i][i] for j in range(n)] for i in range(n)]
    own = [vals[i][i] for i in range(n)]
    return FairnessReport(
        agents=allocation.agents,
        values=tuple(tuple(row) for row in vals),
        proportional=tuple(own[i] >= 1.0 / n - FAIR_TOL for i in range(n)),
        envy=tuple(tuple(row) for row in envy),
        envy_free=all(e <= FAIR_TOL for row in envy for e in row),
        equitable=max(own) - min(own) <= FAIR_TOL,
        utilitarian_total=sum(own))


@dataclass(frozen=True)
class DiscreteInstance:
    """n agents valuing m goods; each row of values sums to 1."""

    values: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValidationError("at least one agent required")
        m = len(self.values[0])
        if m < 1:
            raise ValidationError("at least one good required")
        for i, row in enumerate(self.values):
            if len(row) != m:
                raise ValidationError(f"agent {i}: ragged value row")
            if any(x < 0.0 for x in row):
                raise ValidationError(f"agent {i}: negative value")
            if abs(sum(row) - 1.0) > FAIR_TOL:
                raise ValidationError(
                    f"agent {i}: row sums to {sum(row)!r}, expected 1")

    @property
    def num_agents(self) -> int:
        return len(self.values)

    @property
    def num_goods(self) -> int:
        return len(self.values[0])


def _all_assignment_totals(values: np.ndarray) -> np.ndarray:
    """Totals for every whole-good assignment, one row per assignment.

    Assignment r maps good g to agent (r // n**g) % n, so row order is
    lexicographic with good 0 cycling fastest.
    """
    n, m = values.shape
    count = n ** m
    idx = np.arange(count)
    totals = np.zeros((count, n))
    for g in range(m):
        digit = (idx // n ** g) % n
        for i in range(n):
            totals[:, i] += (digit == i) * values[i, g]
    return totals


def pareto_efficient_discrete(instance: DiscreteInstance,
                              assignment: tuple[int, ...]) -> bool:
    """Exhaustively test a whole-good assignment for Pareto efficiency.

    True iff no alternative whole-good assignment gives every agent at
    least as much and someone strictly more.
    """
    n, m = instance.num_agents, instance.num_goods
    if len(assignment) != m:
        raise ValidationError(f"assignment must cover all {m} goods")
    if any(not 0 <= a < n for a in assignment):
        raise ValidationError("assignment names an unknown agent index")
    if n ** m > MAX_ASSIGNMENTS:
        raise TooLarge(f"{n}^{m} assignments exceed the exhaustive limit")
    values = np.array(instance.values)
    totals = _all_assignment_totals(values)
    base = np.zeros(n)
    for g, who in enumerate(assignment):
        base[who] += values[who, g]
    weak = np.all(totals >= base - DOM_EPS, axis=1)
    strict = np.any(totals > base + DOM_EPS, axis=1)
    return not bool(np.any(weak & strict))


@dataclass(frozen=True)
class SubsetFinding:
    satisfiable: bool
    witness_share: tuple[tuple[float, ...], ...] | None
    witness_totals: tuple[float, ...] | None


@dataclass(frozen=True)
class PerfectionReport:
    subsets: dict[str, SubsetFinding]
    perfect_found: bool
    candidates: int
    note: str


def _candidate_shares(n: int, m: int) -> np.ndarray:
    """Whole assignments, then single-good two-agent splits at k/100."""
    mats = []
    for assign in itertools.product(range(n), repeat=m):
        share = np.zeros((n, m))
        for g, who in enumerate(assign):
            share[who, g] = 1.0
        mats.append(share)
    for g in range(m):
        rest_goods = [x for x in range(m) if x != g]
        for i, j in itertools.combinations(range(n), 2):
            for rest in itertools.product(range(n), repeat=m - 1):
                base = np.zeros((n, m))
                for slot, who in zip(rest_goods, rest):
                    base[who, slot] = 1.0
                for k in range(1, FRACTION_STEPS):
                    share = base.copy()
                    share[i, g] = k / FRACTION_STEPS
                    share[j, g] = 1.0 - k / FRACTION_STEPS
                    mats.append(share)
    return np.array(mats)


def perfect_division_search(instance: DiscreteInstance) -> PerfectionReport:
    """Search whole assignments plus hundredth-grid single splits for every
    combination of efficient, envy-free, and equitable.

    Returns, for each of the seven nonempty property subsets, whether some
    candidate satisfies all properties in the subset, with a witness share
    matrix when one exists.  perfect_found reports the full triple.
    Efficiency means undominated within the enumerated candidates.
    """
    n, m = instance.num_agents, instance.num_goods
    pairs = n * (n - 1) // 2
    count = n ** m + m * pairs * (FRACTION_STEPS - 1) * n ** (m - 1)
    if count > MAX_CANDIDATES:
        raise TooLarge(f"{count} candidate allocations exceed the "
                       f"exhaustive limit of {MAX_CANDIDATES}")
    values = np.array(instance.values)
    shares = _candidate_shares(n, m)
    # cross[c, i, j] = agent i's value of agent j's bundle in candidate c
    cross = np.einsum("ig,cjg->cij", values, shares)
    own = np.einsum("cii->ci", cross)
    eq = (own.max(axis=1) - own.min(axis=1)) <= EQ_SEARCH_TOL
    ef = (cross - own[:, :, None]).max(axis=(1, 2)) <= FAIR_TOL
    util = own.sum(axis=1)

    dom_memo: dict[int, bool] = {}

    def dominated(c: int) -> bool:
        if c not in dom_memo:
            t = own[c]
            weak = np.all(own >= t - DOM_EPS, axis=1)
            strict = np.any(own > t + DOM_EPS, axis=1)
            dom_memo[c] = bool(np.any(weak & strict))
        return dom_memo[c]

    def find_witness(need_eff: bool, need_ef: bool, need_eq: bool) -> int | None:
        mask = np.ones(len(shares), dtype=bool)
        if need_ef:
            mask &= ef
        if need_eq:
            mask &= eq
        idx = np.where(mask)[0]
        if not need_eff:
            return int(idx[0]) if len(idx) else None
        # Highest utilitarian total first: the top candidate is usually
        # undominated, keeping dominance checks rare.
        for c in sorted(idx, key=lambda c: (-util[c], c)):
            if not dominated(int(c)):
                return int(c)
        return None

    subsets: dict[str, SubsetFinding] = {}
    for r in (1, 2, 3):
        for combo in itertools.combinations(PROPERTY_NAMES, r):
            c = find_witness("efficient" in combo, "envy-free" in combo,
                             "equitable" in combo)
            if c is None:
                subsets["+".join(combo)] = SubsetFinding(False, None, None)
            else:
                subsets["+".join(combo)] = SubsetFinding(
                    satisfiable=True,
                    witness_share=tuple(tuple(row) for row in shares[c]),
                    witness_totals=tuple(float(x) for x in own[c]))
    return PerfectionReport(
        subsets=subsets,
        perfect_found=subsets["efficient+envy-free+equitable"].satisfiable,
        candidates=len(shares),
        note=("efficiency is judged within the enumerated space: whole-good "
              "assignments plus one good split between two agents at "
              "hundredth fractions"))


# A 3-agent, 4-good instance with no perfect division in the searched
# space: the efficient+equitable candidates (all agents at 2/5) are envied,
# every envy-free+equitable candidate (all agents at 1/3) is dominated by
# them, and nothing satisfies all three properties.  Certified by
# exhaustive enumeration over all 32,157 candidates.  Four goods are the
# minimum: with three, any equitable level above an envy-free equitable one
# would need every agent to hold at least two of the four available pieces
# (three wholes plus one split), which cannot cover three agents.
IMPERFECT_INSTANCE = DiscreteInstance(values=(
    (2 / 15, 2 / 15, 1 / 3, 2 / 5),
    (4 / 15, 4 / 15, 1 / 3, 2 / 15),
    (2 / 15, 2 / 15, 1 / 3, 2 / 5),
))
