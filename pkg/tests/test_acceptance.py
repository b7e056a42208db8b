"""End-to-end acceptance gate.

Every check prints one PASS/FAIL line (visible under ``pytest -s``) with its
measured runtime, and asserts both the numeric tolerance and the time budget.
"""

import contextlib
import itertools
import json
import math
import time

import numpy as np
import pytest

from cakeshare.cli import main
from cakeshare.errors import ValidationError
from cakeshare.fairness import (IMPERFECT_INSTANCE, audit,
                                perfect_division_search)
from cakeshare.games import PayoffMatrix, best_responses, pure_nash
from cakeshare.protocols import (DiscreteCake, adjusted_winner_2,
                                 maximin_split, selfridge_conway)
from cakeshare.scenario import (load_scenario, scenario_from_dict,
                                serialize_scenario)
from cakeshare.valuation import (ValuationSpec, cumulative, density,
                                 inverse_cumulative, measure, normalize)
from conftest import random_pc_spec, river_trio
from oracles import exhaustive_pure_nash, maximin_fine_oracle, simpson_mass


@contextlib.contextmanager
def gate(name: str, budget: float):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"acceptance {name}: FAIL "
              f"({time.perf_counter() - t0:.3f}s)")
        raise
    dt = time.perf_counter() - t0
    ok = dt < budget
    print(f"acceptance {name}: {'PASS' if ok else 'FAIL'} "
          f"({dt:.3f}s, budget {budget:g}s)")
    assert ok, f"{name} took {dt:.3f}s, budget {budget:g}s"


def test_identical_valuations_cutter_neutral(tmp_path):
    spec = {
        "name": "same-tastes",
        "agents": [{"id": "x"}, {"id": "y"}, {"id": "z"}],
        "valuations": {
            a: {"family": "sinusoid", "offset": 1.0, "amplitude": 0.5,
                "frequency": 2, "phase": 0.3}
            for a in ("x", "y", "z")
        },
    }
    path = tmp_path / "same.toml"
    path.write_text(serialize_scenario(scenario_from_dict(spec)),
                    encoding="utf-8")
    outs = {c: tmp_path / f"{c}.json" for c in ("x", "y", "z")}
    with gate("identical-valuations-cutter-neutral", 0.1):
        for cutter, out in outs.items():
            code = main(["divide", "--protocol", "icyc",
                         "--scenario", str(path), "--cutter", cutter,
                         "--format", "machine", "--out", str(out)])
            assert code == 0
    for out in outs.values():
        doc = json.loads(out.read_text(encoding="utf-8"))
        for pay in doc["result"]["payoffs"]:
            assert abs(pay - 1.0 / 3.0) <= 1e-9


def test_trimming_protocol_envy_free_at_scale():
    rng = np.random.default_rng(7011)
    with gate("trimming-protocol-envy-free", 5.0):
        for _ in range(1000):
            vals = [normalize(random_pc_spec(rng, lab))
                    for lab in ("p", "q", "r")]
            out = selfridge_conway(vals)
            report = audit(out.allocation, vals)
            worst = max(map(max, report.envy))
            assert worst <= 1e-9, worst


def test_point_bidding_equalizes_at_scale():
    rng = np.random.default_rng(7012)
    with gate("point-bidding-equalizes", 2.0):
        for _ in range(1000):
            m = int(rng.integers(1, 11))
            rows = []
            for _ in range(2):
                raw = rng.uniform(0.5, 10.0, m)
                row = (raw * (100.0 / raw.sum())).tolist()
                row[-1] = 100.0 - sum(row[:-1])
                rows.append(tuple(row))
            cake = DiscreteCake(agents=("p", "q"), bids=tuple(rows))
            out = adjusted_winner_2(cake)
            assert abs(out.payoffs[0] - out.payoffs[1]) <= 1e-9
            # recover per-good fractions from the interval geometry
            frac = np.zeros((2, m))
            for i, pc in enumerate(out.allocation.pieces):
                for iv in pc:
                    for g in range(m):
                        lo, hi = g / m, (g + 1) / m
                        ov = min(hi, iv.hi) - max(lo, iv.lo)
                        if ov > 0:
                            frac[i, g] += ov * m
            bids = np.asarray(rows)
            vals = bids @ frac.T  # vals[i, j] = i's points for j's bundle
            assert vals[0, 0] >= vals[0, 1] - 1e-9
            assert vals[1, 1] >= vals[1, 0] - 1e-9
            split = np.sum((frac[0] > 1e-12) & (frac[0] < 1 - 1e-12))
            assert split <= 1


def test_equilibria_match_exhaustive_check():
    rng = np.random.default_rng(7013)
    players = ("P1", "P2", "P3")
    strategies = (("a", "b"),) * 3
    with gate("equilibria-match-exhaustive", 1.0):
        for _ in range(500):
            table = {
                prof: tuple(int(v) for v in rng.integers(0, 11, 3))
                for prof in itertools.product(range(2), repeat=3)
            }
            m = PayoffMatrix(players=players, strategies=strategies,
                             payoffs=table)
            assert pure_nash(m) == set(exhaustive_pure_nash(
                (2, 2, 2), lambda p, i: table[p][i]))


def test_shipped_matrix_anchors():
    with gate("shipped-matrix-anchors", 0.1):
        m = load_scenario("nile").matrix
        assert best_responses(m, "E1/A1/S1", "Ethiopia") == {"E2"}
        assert m.payoffs[m.parse("E2/A1/S1")] == (50.0, 25.0, 25.0)
        assert pure_nash(m) == set()


def _random_valuation(rng: np.random.Generator, i: int):
    kind = i % 6
    if kind == 0:
        spec, brk = ValuationSpec.uniform(label="u"), []
    elif kind == 1:
        spec, brk = ValuationSpec.linear_ramp("increasing", label="ri"), []
    elif kind == 2:
        spec, brk = ValuationSpec.linear_ramp("decreasing", label="rd"), []
    elif kind == 3:
        offset = float(rng.uniform(0.5, 2.0))
        amp = float(rng.uniform(0.0, offset))
        spec = ValuationSpec.sinusoid(offset, amp, int(rng.integers(1, 5)),
                                      float(rng.uniform(0.0, 2 * math.pi)),
                                      label="s")
        brk = []
    elif kind == 4:
        spec = random_pc_spec(rng, "pc")
        brk = [x for x, _ in spec.points][1:-1]
    else:
        k = int(rng.integers(2, 7))
        gaps = rng.uniform(0.2, 1.0, k)
        xs = np.concatenate(([0.0], np.cumsum(gaps) / gaps.sum()))
        xs[-1] = 1.0
        ys = rng.uniform(0.0, 3.0, k + 1)
        ys[int(rng.integers(0, k + 1))] += 0.5
        spec = ValuationSpec.piecewise_linear(
            list(zip(xs.tolist(), ys.tolist())), label="pl")
        brk = xs.tolist()[1:-1]
    return normalize(spec), brk


def test_closed_form_measure_matches_quadrature():
    rng = np.random.default_rng(7014)
    with gate("measure-matches-quadrature", 5.0):
        worst = 0.0
        for i in range(500):
            v, brk = _random_valuation(rng, i)
            for _ in range(20):
                a, b = np.sort(rng.uniform(0.0, 1.0, 2))
                ref = simpson_mass(lambda xs: density(v, xs), float(a),
                                   float(b), panels=2048, breakpoints=brk)
                worst = max(worst, abs(measure(v, (float(a), float(b))) - ref))
        assert worst <= 1e-8, worst


def test_inverse_cumulative_round_trip():
    ts = np.linspace(0.0, 1.0, 1001)
    vals = list(load_scenario("nile").valuations)
    vals += list(load_scenario("nile-sine").valuations)
    with gate("inverse-round-trip", 1.0):
        for v in vals:
            for t in ts:
                x = inverse_cumulative(v, float(t))
                assert abs(cumulative(v, x) - t) <= 1e-9


def test_worst_share_maximization():
    with gate("worst-share-maximization", 10.0):
        trio = [normalize(ValuationSpec.uniform(label=l))
                for l in ("u1", "u2", "u3")]
        out = maximin_split(trio)
        assert abs(out.meta["objective"] - 1.0 / 3.0) <= 1e-6
        cuts = sorted(out.meta["cuts"])
        assert abs(cuts[0] - 1.0 / 3.0) <= 1e-4
        assert abs(cuts[1] - 2.0 / 3.0) <= 1e-4

        nile = river_trio()
        got = maximin_split(nile)
        ref = maximin_fine_oracle(
            [lambda x, v=v: cumulative(v, x) for v in nile])
        assert abs(got.meta["objective"] - ref["objective"]) <= 1e-6


def test_shipped_instance_perfection_gap():
    with gate("shipped-instance-perfection-gap", 30.0):
        report = perfect_division_search(IMPERFECT_INSTANCE)
        assert not report.perfect_found
        for key in ("efficient+equitable", "envy-free+equitable"):
            finding = report.subsets[key]
            assert finding.satisfiable
            assert finding.witness_share is not None
        assert not report.subsets["efficient+envy-free+equitable"].satisfiable


SUITE = [
    ["divide", "--protocol", "icyc"],
    ["divide", "--protocol", "icyc", "--cutter", "Egypt"],
    ["divide", "--protocol", "icyc", "--cutter", "Sudan"],
    ["divide", "--protocol", "selfridge-conway"],
    ["audit", "--protocol", "icyc"],
    ["aw"],
    ["maximin"],
    ["nash"],
    ["path", "--start", "E1/A1/S1"],
    ["curve"],
    ["proposals"],
]
PLOTS = ["densities", "payoffs-by-cutter", "water-curve", "proposal-heatmap"]


def run_suite(outdir):
    outdir.mkdir(parents=True, exist_ok=True)
    for i, argv in enumerate(SUITE):
        for fmt in ("human", "machine"):
            ext = "txt" if fmt == "human" else "json"
            code = main(argv + ["--format", fmt, "--out",
                                str(outdir / f"{i:02d}_{argv[0]}.{ext}")])
            assert code == 0, argv
    for kind in PLOTS:
        code = main(["plot-data", "--kind", kind,
                     "--out", str(outdir / f"{kind}.tsv")])
        assert code == 0, kind


def test_full_suite_determinism(tmp_path):
    with gate("full-suite-determinism", 30.0):
        one, two = tmp_path / "one", tmp_path / "two"
        run_suite(one)
        run_suite(two)
        names = sorted(p.name for p in one.iterdir())
        assert names == sorted(p.name for p in two.iterdir())
        for name in names:
            assert (one / name).read_bytes() == (two / name).read_bytes(), name
