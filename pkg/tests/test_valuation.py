import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cakeshare.errors import (NegativeDensity, OutOfDomain, ValidationError,
                              ZeroMass)
from cakeshare.valuation import (ValuationSpec, cumulative, cut_point, density,
                                 inverse_cumulative, measure, normalize,
                                 quadrature_oracle)

from conftest import random_pc_spec, river_trio


def spec_strategy():
    uniform = st.just(ValuationSpec.uniform())
    ramp = st.sampled_from(["increasing", "decreasing"]).map(
        ValuationSpec.linear_ramp)
    sinusoid = st.tuples(
        st.floats(0.2, 3.0), st.floats(0.0, 1.0), st.integers(1, 6),
        st.floats(0.0, 2.0 * math.pi),
    ).filter(lambda t: t[1] <= t[0]).map(lambda t: ValuationSpec.sinusoid(*t))
    pc = st.integers(0, 2 ** 31 - 1).map(
        lambda seed: random_pc_spec(np.random.default_rng(seed), "pc"))
    pl = st.lists(st.floats(0.0, 4.0), min_size=2, max_size=6).filter(
        lambda hs: sum(hs) > 0.5).map(
        lambda hs: ValuationSpec.piecewise_linear(
            list(zip(np.linspace(0.0, 1.0, len(hs)).tolist(), hs))))
    return st.one_of(uniform, ramp, sinusoid, pc, pl)


def test_uniform_is_flat():
    v = normalize(ValuationSpec.uniform())
    assert density(v, 0.1) == pytest.approx(1.0)
    assert measure(v, (0.2, 0.7)) == pytest.approx(0.5, abs=1e-12)
    assert cumulative(v, 0.3) == pytest.approx(0.3, abs=1e-12)


def test_ramp_up_cumulative_is_square():
    v = normalize(ValuationSpec.linear_ramp("increasing"))
    for x in (0.0, 0.25, 0.5, 0.8, 1.0):
        assert cumulative(v, x) == pytest.approx(x * x, abs=1e-12)
    assert density(v, 0.5) == pytest.approx(1.0)


def test_ramp_down_mirrors_ramp_up():
    up = normalize(ValuationSpec.linear_ramp("increasing"))
    dn = normalize(ValuationSpec.linear_ramp("decreasing"))
    for x in (0.1, 0.4, 0.9):
        assert density(dn, x) == pytest.approx(density(up, 1.0 - x), abs=1e-12)
        assert measure(dn, (0.0, x)) == pytest.approx(
            measure(up, (1.0 - x, 1.0)), abs=1e-12)


def test_sinusoid_mass_and_median_pinned():
    v = normalize(ValuationSpec.sinusoid(1.0, 0.5, 3))
    # closed-form integral of 1 + 0.5 sin(6 pi x) over [0, 0.2]
    assert measure(v, (0.0, 0.2)) == pytest.approx(0.2479856661320027,
                                                   abs=1e-12)
    assert inverse_cumulative(v, 0.5) == pytest.approx(0.45567908396373014,
                                                       abs=1e-9)


def test_piecewise_constant_normalizes():
    v = normalize(ValuationSpec.piecewise_constant([0.0, 0.5, 1.0], [2.0, 0.5]))
    # raw mass 1.25, so the tall half carries 0.8 of the value
    assert measure(v, (0.0, 0.5)) == pytest.approx(0.8, abs=1e-12)
    assert density(v, 0.25) == pytest.approx(2.0 / 1.25, abs=1e-12)
    assert density(v, 0.75) == pytest.approx(0.5 / 1.25, abs=1e-12)


def test_piecewise_constant_edge_height_mismatch():
    with pytest.raises(ValidationError):
        ValuationSpec.piecewise_constant([0.0, 0.5, 1.0], [2.0, 0.5, 1.0])


def test_piecewise_linear_triangle():
    v = normalize(ValuationSpec.piecewise_linear([(0.0, 0.0), (1.0, 2.0)]))
    for x in (0.0, 0.3, 0.7, 1.0):
        assert cumulative(v, x) == pytest.approx(x * x, abs=1e-12)


def test_breakpoints_must_span_unit_interval():
    with pytest.raises(ValidationError):
        normalize(ValuationSpec.piecewise_linear([(0.1, 1.0), (1.0, 1.0)]))
    with pytest.raises(ValidationError):
        normalize(ValuationSpec.piecewise_linear([(0.0, 1.0), (0.9, 1.0)]))
    with pytest.raises(ValidationError):
        normalize(ValuationSpec.piecewise_constant([0.0, 0.5, 0.5, 1.0],
                                                   [1.0, 1.0, 1.0]))


def test_negative_density_rejected():
    with pytest.raises(NegativeDensity):
        normalize(ValuationSpec.piecewise_linear([(0.0, -0.1), (1.0, 1.0)]))
    with pytest.raises(NegativeDensity):
        normalize(ValuationSpec.sinusoid(1.0, 1.5, 2))


def test_zero_mass_rejected():
    with pytest.raises(ZeroMass):
        normalize(ValuationSpec.piecewise_constant([0.0, 1.0], [0.0]))


def test_bad_direction_and_frequency():
    with pytest.raises(ValidationError):
        normalize(ValuationSpec.linear_ramp("up"))
    with pytest.raises(ValidationError):
        normalize(ValuationSpec.sinusoid(1.0, 0.5, 0))


def test_out_of_domain_queries():
    v = normalize(ValuationSpec.uniform())
    with pytest.raises(OutOfDomain):
        measure(v, (0.5, 1.2))
    with pytest.raises(OutOfDomain):
        cumulative(v, -0.1)
    with pytest.raises(OutOfDomain):
        inverse_cumulative(v, 1.5)


def test_cut_point_uniform():
    v = normalize(ValuationSpec.uniform())
    assert cut_point(v, 0.25, 0.5) == pytest.approx(0.75, abs=1e-9)
    # target beyond the remaining mass clamps to the right edge
    assert cut_point(v, 0.8, 0.5) == pytest.approx(1.0, abs=1e-9)


def test_density_vectorized_matches_scalar():
    for v in river_trio():
        xs = np.linspace(0.0, 1.0, 17)
        vec = density(v, xs)
        for x, y in zip(xs, vec):
            assert density(v, float(x)) == pytest.approx(float(y), abs=1e-12)


def test_quadrature_matches_closed_form_on_trio():
    for v in river_trio():
        for a, b in ((0.0, 1.0), (0.13, 0.77), (0.5, 0.5)):
            assert quadrature_oracle(v, a, b) == pytest.approx(
                measure(v, (a, b)), abs=1e-10)


def test_quadrature_one_sided_at_jumps():
    # panel endpoints falling on a step edge must take the height of the
    # segment under integration, not the neighbour's
    v = normalize(ValuationSpec.piecewise_constant(
        [0.0, 0.3, 1.0], [3.0, 1.0], label="t"))
    for a, b in ((0.0, 1.0), (0.005, 0.97), (0.1, 0.3)):
        assert quadrature_oracle(v, a, b) == pytest.approx(
            measure(v, (a, b)), abs=1e-10)


@given(spec_strategy(), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_measure_additive(spec, a, b):
    v = normalize(spec)
    lo, hi = min(a, b), max(a, b)
    mid = 0.5 * (lo + hi)
    whole = measure(v, (lo, hi))
    parts = measure(v, (lo, mid)) + measure(v, (mid, hi))
    assert whole == pytest.approx(parts, abs=1e-11)


@given(spec_strategy())
def test_total_mass_is_one(spec):
    v = normalize(spec)
    assert measure(v, (0.0, 1.0)) == pytest.approx(1.0, abs=1e-11)


@given(spec_strategy(), st.floats(0.0, 1.0))
def test_inverse_round_trip(spec, t):
    v = normalize(spec)
    x = inverse_cumulative(v, t)
    assert 0.0 <= x <= 1.0
    assert cumulative(v, x) == pytest.approx(t, abs=1e-9)


@given(spec_strategy(), st.floats(0.0, 1.0), st.floats(0.0, 1.0))
def test_cumulative_monotone(spec, a, b):
    v = normalize(spec)
    lo, hi = min(a, b), max(a, b)
    assert cumulative(v, hi) >= cumulative(v, lo) - 1e-12
