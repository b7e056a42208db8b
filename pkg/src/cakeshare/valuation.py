"""Value densities on the unit interval and their exact integrals.

A ``ValuationSpec`` describes a raw, unnormalized density from one of five
families.  :func:`normalize` validates it and attaches the scale factor that
makes the density integrate to one; the result is a ``Valuation``.  All
measures are evaluated through closed-form antiderivatives, so integrating a
piece is exact up to float rounding.  :func:`quadrature_oracle` offers an
independent composite-Simpson route used by the test suite to certify the
closed forms.

Families
--------
uniform
    Constant density.
piecewise-constant
    ``points`` holds (x, height) pairs with x strictly increasing from 0 to 1.
    The height paired with breakpoint ``x_i`` applies on ``[x_i, x_{i+1})``;
    the final pair's height is the density value at x = 1 only and does not
    influence any integral.
piecewise-linear
    ``points`` are knots joined linearly, same breakpoint rules.
sinusoid
    ``offset + amplitude * sin(2*pi*frequency*x + phase)`` with integer
    frequency >= 1; requires ``|amplitude| <= offset`` so the density stays
    nonnegative.
linear-ramp
    Raw density x (increasing) or 1 - x (decreasing).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

from .cake import Interval, Piece
from .errors import NegativeDensity, OutOfDomain, Unsupported, ValidationError, ZeroMass

FAMILIES = ("uniform", "piecewise-constant", "piecewise-linear", "sinusoid", "linear-ramp")

# Raw integrals at or below this mass cannot be normalized.
ZERO_MASS_TOL = 1e-12
# Bisection budget for quantile inversion.
INVERT_X_TOL = 1e-12
INVERT_MAX_ITER = 200


@dataclass(frozen=True)
class ValuationSpec:
    """Parameters of one raw density; see the module docstring for families."""

    family: str
    label: str = ""
    points: tuple[tuple[float, float], ...] = ()
    offset: float = 0.0
    amplitude: float = 0.0
    frequency: int = 1
    phase: float = 0.0
    direction: str = "increasing"

    @staticmethod
    def uniform(label: str = "") -> "ValuationSpec":
        return ValuationSpec(family="uniform", label=label)

    @staticmethod
    def piecewise_constant(edges: Iterable[float], heights: Iterable[float],
                          label: str = "") -> "ValuationSpec":
        """Build from segment edges and per-segment heights.

        ``len(edges) == len(heights) + 1``; the final stored point repeats the
        last segment height so the density is defined at x = 1.
        """
        edges = [float(e) for e in edges]
        heights = [float(h) for h in heights]
        if len(edges) != len(heights) + 1:
            raise ValidationError("piecewise-constant needs one more edge than heights")
        pts = tuple(zip(edges, heights + [heights[-1]] if heights else []))
        return ValuationSpec(family="piecewise-constant", label=label, points=pts)

    @staticmethod
    def piecewise_linear(points: Iterable[tuple[float, float]],
                         label: str = "") -> "ValuationSpec":
        pts = tuple((float(x), float(h)) for x, h in points)
        return ValuationSpec(family="piecewise-linear", label=label, points=pts)

    @staticmethod
    def sinusoid(offset: float, amplitude: float, frequency: int,
                 phase: float = 0.0, label: str = "") -> "ValuationSpec":
        return ValuationSpec(family="sinusoid", label=label, offset=float(offset),
                             amplitude=float(amplitude), frequency=int(frequency),
                             phase=float(phase))

    @staticmethod
    def linear_ramp(direction: str, label: str = "") -> "ValuationSpec":
        return ValuationSpec(family="linear-ramp", label=label, direction=direction)

    def with_label(self, label: str) -> "ValuationSpec":
        return replace(self, label=label)


@dataclass(frozen=True)
class Valuation:
    """A validated spec plus the scale that makes it integrate to one."""

    spec: ValuationSpec
    scale: float

    @property
    def label(self) -> str:
        return self.spec.label


def _validate_structure(spec: ValuationSpec) -> None:
    name = spec.label or "<unlabeled>"
    if spec.family not in FAMILIES:
        raise ValidationError(f"valuation {name}: unknown family {spec.family!r}")
    if spec.family in ("piecewise-constant", "piecewise-linear"):
        pts = spec.points
        if len(pts) < 2:
            raise ValidationError(f"valuation {name}: needs at least two breakpoints")
        xs = [x for x, _ in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValidationError(f"valuation {name}: breakpoints must strictly increase")
        if xs[0] != 0.0 or xs[-1] != 1.0:
            raise ValidationError(f"valuation {name}: breakpoints must span exactly [0, 1]")
        for x, h in pts:
            if not (math.isfinite(x) and math.isfinite(h)):
                raise ValidationError(f"valuation {name}: non-finite breakpoint")
    elif spec.family == "sinusoid":
        if not (isinstance(spec.frequency, int) and spec.frequency >= 1):
            raise ValidationError(f"valuation {name}: frequency must be a positive integer")
        for v in (spec.offset, spec.amplitude, spec.phase):
            if not math.isfinite(v):
                raise ValidationError(f"valuation {name}: non-finite sinusoid parameter")
    elif spec.family == "linear-ramp":
        if spec.direction not in ("increasing", "decreasing"):
            raise ValidationError(f"valuation {name}: direction must be "
                                  f"'increasing' or 'decreasing'")


def _check_nonnegative(spec: ValuationSpec) -> None:
    name = spec.label or "<unlabeled>"
    if spec.family in ("piecewise-constant", "piecewise-linear"):
        if any(h < 0.0 for _, h in spec.points):
            raise NegativeDensity(f"valuation {name}: negative height")
    elif spec.family == "sinusoid":
        if spec.offset < 0.0 or abs(spec.amplitude) > spec.offset:
            raise NegativeDensity(f"valuation {name}: requires |amplitude| <= offset")


@lru_cache(maxsize=512)
def _knot_arrays(spec: ValuationSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(xs, hs, cumulative raw integral at each knot) for pc/pl specs."""
    xs = np.array([x for x, _ in spec.points], dtype=float)
    hs = np.array([h for _, h in spec.points], dtype=float)
    dx = np.diff(xs)
    if spec.family == "piecewise-constant":
        seg = hs[:-1] * dx
    else:
        seg = 0.5 * (hs[:-1] + hs[1:]) * dx
    cums = np.concatenate(([0.0], np.cumsum(seg)))
    return xs, hs, cums


def _raw_antiderivative(spec: ValuationSpec, x: float) -> float:
    """Antiderivative of the raw density, anchored so the value at 0 is 0."""
    fam = spec.family
    if fam == "uniform":
        return x
    if fam == "linear-ramp":
        if spec.direction == "increasing":
            return 0.5 * x * x
        return x - 0.5 * x * x
    if fam == "sinusoid":
        w = 2.0 * math.pi * spec.frequency
        return spec.offset * x - (spec.amplitude / w) * (math.cos(w * x + spec.phase)
                                                         - math.cos(spec.phase))
    xs, hs, cums = _knot_arrays(spec)
    i = int(np.searchsorted(xs, x, side="right")) - 1
    i = min(max(i, 0), len(xs) - 2)
    dx = x - xs[i]
    if fam == "piecewise-constant":
        return float(cums[i] + hs[i] * dx)
    slope = (hs[i + 1] - hs[i]) / (xs[i + 1] - xs[i])
    return float(cums[i] + hs[i] * dx + 0.5 * slope * dx * dx)


def raw_integral(spec: ValuationSpec) -> float:
    return _raw_antiderivative(spec, 1.0)


def normalize(spec: ValuationSpec) -> Valuation:
    """Validate a spec and attach the scale making it integrate to one.

    Raises ``NegativeDensity`` when the density dips below zero anywhere and
    ``ZeroMass`` when the raw integral is at most 1e-12.
    """
    _validate_structure(spec)
    _check_nonnegative(spec)
    total = raw_integral(spec)
    if total <= ZERO_MASS_TOL:
        name = spec.label or "<unlabeled>"
        raise ZeroMass(f"valuation {name}: raw density integrates to {total!r}")
    return Valuation(spec=spec, scale=1.0 / total)


def density(v: Valuation, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Normalized density at x; accepts a scalar or a numpy array."""
    spec = v.spec
    fam = spec.family
    if isinstance(x, np.ndarray):
        if fam == "uniform":
            return np.full_like(x, v.scale, dtype=float)
        if fam == "linear-ramp":
            raw = x if spec.direction == "increasing" else 1.0 - x
            return v.scale * raw
        if fam == "sinusoid":
            w = 2.0 * math.pi * spec.frequency
            return v.scale * (spec.offset + spec.amplitude * np.sin(w * x + spec.phase))
        xs, hs, _ = _knot_arrays(spec)
        if fam == "piecewise-linear":
            return v.scale * np.interp(x, xs, hs)
        idx = np.clip(np.searchsorted(xs, x, side="right") - 1, 0, len(xs) - 2)
        return v.scale * hs[idx]
    if fam == "uniform":
        return v.scale
    if fam == "linear-ramp":
        return v.scale * (x if spec.direction == "increasing" else 1.0 - x)
    if fam == "sinusoid":
        w = 2.0 * math.pi * spec.frequency
        return v.scale * (spec.offset + spec.amplitude * math.sin(w * x + spec.phase))
    xs, hs, _ = _knot_arrays(spec)
    i = int(np.searchsorted(xs, x, side="right")) - 1
    i = min(max(i, 0), len(xs) - 2)
    if fam == "piecewise-linear":
        return v.scale * float(np.interp(x, xs, hs))
    return v.scale * float(hs[i])


def cumulative(v: Valuation, x: float) -> float:
    """Mass of [0, x] under the normalized density; clamped to [0, 1]."""
    if not (0.0 <= x <= 1.0):
        raise OutOfDomain(f"cumulative point {x!r} outside [0, 1]")
    c = v.scale * _raw_antiderivative(v.spec, x)
    return min(1.0, max(0.0, c))


def measure(v: Valuation, piece: Union[Piece, Interval, tuple[float, float]]) -> float:
    """Mass of a piece (or single interval) under the normalized density."""
    if isinstance(piece, Piece):
        spans = [(iv.lo, iv.hi) for iv in piece.intervals]
    elif isinstance(piece, Interval):
        spans = [(piece.lo, piece.hi)]
    else:
        spans = [(float(piece[0]), float(piece[1]))]
    total = 0.0
    for lo, hi in spans:
        if not (0.0 <= lo <= hi <= 1.0):
            raise OutOfDomain(f"interval [{lo}, {hi}] outside [0, 1]")
        part = v.scale * (_raw_antiderivative(v.spec, hi) - _raw_antiderivative(v.spec, lo))
        total += max(0.0, part)
    return min(1.0, total)


def inverse_cumulative(v: Valuation, t: float) -> float:
    """Leftmost x with ``cumulative(v, x) >= t``, to within 1e-12 in x.

    Bisection on the nondecreasing cumulative; flat stretches resolve to
    their left endpoint.
    """
    if not (0.0 <= t <= 1.0):
        raise OutOfDomain(f"quantile {t!r} outside [0, 1]")
    if cumulative(v, 0.0) >= t:
        return 0.0
    lo, hi = 0.0, 1.0
    for _ in range(INVERT_MAX_ITER):
        if hi - lo <= INVERT_X_TOL:
            break
        mid = 0.5 * (lo + hi)
        if cumulative(v, mid) >= t:
            hi = mid
        else:
            lo = mid
    return hi


def cut_point(v: Valuation, start: float, target: float) -> float:
    """Leftmost y >= start with ``measure(v, [start, y]) >= target``."""
    base = cumulative(v, start)
    t = min(1.0, base + target)
    return max(start, inverse_cumulative(v, t))


def _segment_edges(spec: ValuationSpec, a: float, b: float) -> list[float]:
    edges = [a]
    if spec.family in ("piecewise-constant", "piecewise-linear"):
        edges.extend(x for x, _ in spec.points if a < x < b)
    edges.append(b)
    return edges


def quadrature_oracle(v: Valuation, a: float, b: float, panels: int = 4096) -> float:
    """Composite-Simpson estimate of the mass on [a, b].

    Panels are distributed over the smooth stretches between density
    breakpoints, so the estimate does not straddle discontinuities.  Used by
    the tests to certify :func:`measure`; the closed forms never call this.
    """
    if not (0.0 <= a <= b <= 1.0):
        raise OutOfDomain(f"quadrature interval [{a}, {b}] outside [0, 1]")
    if b == a:
        return 0.0
    if panels < 1:
        raise Unsupported("panel count must be positive")
    edges = _segment_edges(v.spec, a, b)
    total = 0.0
    width = b - a
    for lo, hi in zip(edges, edges[1:]):
        n = max(1, math.ceil(panels * (hi - lo) / width))
        xs = np.linspace(lo, hi, 2 * n + 1)
        # sample one-sided limits at the segment ends so a jump breakpoint
        # contributes the height of the segment being integrated
        nudge = (hi - lo) * 1e-9
        xs[0] += nudge
        xs[-1] -= nudge
        ys = density(v, xs)
        h = (hi - lo) / (2 * n)
        w = np.ones(2 * n + 1)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        total += h / 3.0 * float(np.dot(w, ys))
    return total
