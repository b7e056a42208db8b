"""Geometry of the divided resource: intervals, pieces, allocations.

The resource is the unit interval.  A piece is a finite union of closed
subintervals held in canonical form: sorted, pairwise separated by more
than ``MERGE_GAP``, no zero-length members.  All lengths and overlaps are
judged at the 1e-9 scale fixed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OutOfDomain

# Gap at or below which neighbouring intervals are considered contiguous.
MERGE_GAP = 1e-9
# Pass/fail threshold for overlap and coverage checks.
COVER_TOL = 1e-9


@dataclass(frozen=True)
class Interval:
    """Closed subinterval [lo, hi] of the unit interval, lo <= hi."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise OutOfDomain(f"interval [{self.lo}, {self.hi}] is not inside [0, 1]")

    @property
    def length(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class Piece:
    """Canonical union of intervals.  Build with :func:`canonicalize`."""

    intervals: tuple[Interval, ...]

    @property
    def length(self) -> float:
        return sum(iv.length for iv in self.intervals)

    def __iter__(self):
        return iter(self.intervals)


EMPTY_PIECE = Piece(intervals=())


@dataclass(frozen=True)
class Allocation:
    """One piece per agent, in agent order."""

    agents: tuple[str, ...]
    pieces: tuple[Piece, ...]

    def piece_of(self, agent: str) -> Piece:
        return self.pieces[self.agents.index(agent)]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a partition check; failures are entries, not exceptions."""

    overlap_length: float
    uncovered_length: float
    ok: bool


def interval(lo: float, hi: float) -> Interval:
    return Interval(lo=float(lo), hi=float(hi))


def canonicalize(intervals: Iterable[Interval | tuple[float, float]]) -> Piece:
    """Sort, merge near-contiguous intervals, and drop zero-length ones.

    Intervals separated by a gap of at most ``MERGE_GAP`` are merged, so the
    result's members are pairwise more than ``MERGE_GAP`` apart.  Endpoints
    outside [0, 1] raise ``OutOfDomain``.  Idempotent.
    """
    items: list[Interval] = []
    for iv in intervals:
        if not isinstance(iv, Interval):
            iv = Interval(lo=float(iv[0]), hi=float(iv[1]))
        items.append(iv)
    items.sort(key=lambda iv: (iv.lo, iv.hi))
    merged: list[list[float]] = []
    for iv in items:
        if merged and iv.lo - merged[-1][1] <= MERGE_GAP:
            merged[-1][1] = max(merged[-1][1], iv.hi)
        else:
            merged.append([iv.lo, iv.hi])
    kept = tuple(Interval(lo=lo, hi=hi) for lo, hi in merged if hi - lo > 0.0)
    return Piece(intervals=kept)


def piece(*bounds: tuple[float, float]) -> Piece:
    """Convenience constructor: ``piece((0, 0.25), (0.5, 1))``."""
    return canonicalize(bounds)


def allocation(agents: Sequence[str], pieces: Sequence[Piece]) -> Allocation:
    return Allocation(agents=tuple(agents), pieces=tuple(pieces))


def _pair_overlap(a: Piece, b: Piece) -> float:
    total = 0.0
    for ia in a:
        for ib in b:
            lo = max(ia.lo, ib.lo)
            hi = min(ia.hi, ib.hi)
            if hi > lo:
                total += hi - lo
    return total


def validate_allocation(alloc: Allocation) -> ValidationReport:
    """Check that the pieces tile [0, 1]: report overlap and uncovered length."""
    overlap = 0.0
    for i in range(len(alloc.pieces)):
        for j in range(i + 1, len(alloc.pieces)):
            overlap += _pair_overlap(alloc.pieces[i], alloc.pieces[j])

    # Union length via an endpoint sweep over all intervals together.
    spans = sorted(
        (iv.lo, iv.hi) for p in alloc.pieces for iv in p.intervals
    )
    covered = 0.0
    cur_lo: float | None = None
    cur_hi = 0.0
    for lo, hi in spans:
        if cur_lo is None:
            cur_lo, cur_hi = lo, hi
        elif lo <= cur_hi:
            cur_hi = max(cur_hi, hi)
        else:
            covered += cur_hi - cur_lo
            cur_lo, cur_hi = lo, hi
    if cur_lo is not None:
        covered += cur_hi - cur_lo
    uncovered = max(0.0, 1.0 - covered)

    return ValidationReport(
        overlap_length=overlap,
        uncovered_length=uncovered,
        ok=(overlap <= COVER_TOL and uncovered <= COVER_TOL),
    )
