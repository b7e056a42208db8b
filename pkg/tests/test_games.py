import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cakeshare.errors import (BadRowSum, UnknownPlayer, UnknownStrategy,
                              ValidationError)
from cakeshare.games import (PayoffMatrix, ProposalTable, WaterSplitCurve,
                             best_responses, improving_path, payoff_curve,
                             proposal_table, pure_nash)

from oracles import exhaustive_pure_nash


def nile_matrix():
    strategies = (("E1", "E2"), ("A1", "A2"), ("S1", "S2"))
    rows = {
        "E1/A1/S1": (35.0, 40.0, 25.0),
        "E1/A1/S2": (30.0, 30.0, 40.0),
        "E1/A2/S1": (40.0, 40.0, 20.0),
        "E1/A2/S2": (35.0, 10.0, 55.0),
        "E2/A1/S1": (50.0, 25.0, 25.0),
        "E2/A1/S2": (50.0, 20.0, 30.0),
        "E2/A2/S1": (25.0, 30.0, 45.0),
        "E2/A2/S2": (40.0, 30.0, 30.0),
    }
    payoffs = {}
    for key, vec in rows.items():
        prof = tuple(strategies[i].index(lab)
                     for i, lab in enumerate(key.split("/")))
        payoffs[prof] = vec
    return PayoffMatrix(players=("Ethiopia", "Egypt", "Sudan"),
                        strategies=strategies, payoffs=payoffs)


def random_matrix(rng, shape=(2, 2, 2), lo=0, hi=10):
    payoffs = {
        prof: tuple(float(x) for x in rng.integers(lo, hi, len(shape)))
        for prof in itertools.product(*(range(k) for k in shape))
    }
    return PayoffMatrix(
        players=tuple(f"p{i}" for i in range(len(shape))),
        strategies=tuple(tuple(f"s{i}{j}" for j in range(k))
                         for i, k in enumerate(shape)),
        payoffs=payoffs)


# ---------------------------------------------------------------------------
# construction and lookup
# ---------------------------------------------------------------------------

def test_matrix_requires_full_coverage():
    with pytest.raises(ValidationError):
        PayoffMatrix(players=("a", "b"), strategies=(("x", "y"), ("u", "v")),
                     payoffs={(0, 0): (1.0, 1.0)})


def test_matrix_rejects_wrong_vector_arity():
    with pytest.raises(ValidationError):
        PayoffMatrix(players=("a", "b"), strategies=(("x", "y"), ("u",)),
                     payoffs={(0, 0): (1.0,), (1, 0): (1.0, 2.0)})


def test_label_parse_round_trip():
    m = nile_matrix()
    for prof in m.profiles():
        assert m.parse(m.label(prof)) == prof
    with pytest.raises(UnknownStrategy):
        m.parse("E1/A1/S9")
    with pytest.raises(ValidationError):
        m.parse("E1/A1")


def test_unknown_player_and_strategy():
    m = nile_matrix()
    with pytest.raises(UnknownPlayer):
        best_responses(m, "E1/A1/S1", "Atlantis")
    with pytest.raises(UnknownStrategy):
        improving_path(m, ("E9", "A1", "S1"))


# ---------------------------------------------------------------------------
# equilibria
# ---------------------------------------------------------------------------

def test_shipped_matrix_has_no_pure_equilibrium():
    assert pure_nash(nile_matrix()) == set()


def test_shipped_matrix_anchor_rows():
    m = nile_matrix()
    assert m.payoffs[m.parse("E2/A1/S1")] == (50.0, 25.0, 25.0)
    assert m.payoffs[m.parse("E2/A2/S2")] == (40.0, 30.0, 30.0)


def test_best_responses_at_start_profile():
    m = nile_matrix()
    assert best_responses(m, "E1/A1/S1", "Ethiopia") == {"E2"}
    # the switch lands on the anchor row
    assert m.payoffs[m.parse("E2/A1/S1")] == (50.0, 25.0, 25.0)


def test_pure_nash_matches_oracle_on_random_batch():
    rng = np.random.default_rng(211)
    for trial in range(500):
        m = random_matrix(rng)
        want = set(exhaustive_pure_nash(
            (2, 2, 2), lambda prof, p: m.payoffs[prof][p]))
        assert pure_nash(m) == want


def test_pure_nash_oracle_on_ragged_shapes():
    rng = np.random.default_rng(977)
    for shape in ((3, 2), (2, 4), (3, 3, 2)):
        for trial in range(40):
            m = random_matrix(rng, shape)
            want = set(exhaustive_pure_nash(
                shape, lambda prof, p: m.payoffs[prof][p]))
            assert pure_nash(m) == want


def test_nash_iff_everyone_best_responding():
    rng = np.random.default_rng(31)
    for trial in range(50):
        m = random_matrix(rng)
        eq = pure_nash(m)
        for prof in m.profiles():
            stable = all(
                m.strategies[i][prof[i]] in best_responses(m, prof, player)
                for i, player in enumerate(m.players))
            assert (prof in eq) == stable


@given(st.integers(0, 2 ** 31 - 1), st.floats(0.1, 9.0), st.floats(-50.0, 50.0))
def test_equilibria_affine_invariant(seed, a, b):
    rng = np.random.default_rng(seed)
    m = random_matrix(rng)
    scaled = PayoffMatrix(
        players=m.players, strategies=m.strategies,
        payoffs={p: tuple(a * x + b for x in vec)
                 for p, vec in m.payoffs.items()})
    assert pure_nash(scaled) == pure_nash(m)
    for player in m.players:
        assert best_responses(scaled, (0, 0, 0), player) == \
            best_responses(m, (0, 0, 0), player)


# ---------------------------------------------------------------------------
# improving paths
# ---------------------------------------------------------------------------

def test_improving_path_cycles_on_shipped_matrix():
    m = nile_matrix()
    path = improving_path(m, "E1/A1/S1")
    labels = [m.label(p) for p in path.profiles]
    assert labels == ["E1/A1/S1", "E2/A1/S1", "E2/A2/S1", "E1/A2/S1",
                      "E1/A2/S2", "E2/A2/S2", "E2/A2/S1"]
    assert path.status == "cycle"
    assert path.cycle_start == 2
    assert path.steps[0].player == "Ethiopia"
    assert path.steps[0].moved_to == "E2"


def test_improving_path_stops_at_equilibrium():
    # dominant strategies: (1, 1) is the unique equilibrium
    m = PayoffMatrix(
        players=("a", "b"), strategies=(("x", "y"), ("u", "v")),
        payoffs={(0, 0): (0.0, 0.0), (0, 1): (0.0, 1.0),
                 (1, 0): (1.0, 0.0), (1, 1): (1.0, 1.0)})
    path = improving_path(m, (0, 0))
    assert path.status == "at-equilibrium"
    assert path.profiles[-1] == (1, 1)
    assert path.profiles[-1] in pure_nash(m)


def test_improving_path_respects_max_steps():
    m = nile_matrix()
    path = improving_path(m, "E1/A1/S1", max_steps=2)
    assert path.status == "max-steps"
    assert len(path.steps) == 2
    with pytest.raises(ValidationError):
        improving_path(m, "E1/A1/S1", max_steps=0)


@given(st.integers(0, 2 ** 31 - 1))
def test_improving_path_always_terminates_definitely(seed):
    rng = np.random.default_rng(seed)
    m = random_matrix(rng)
    path = improving_path(m, (0, 0, 0))
    assert path.status in ("at-equilibrium", "cycle", "max-steps")
    assert len(path.steps) <= 64
    if path.status == "at-equilibrium":
        assert path.profiles[-1] in pure_nash(m)
    if path.status == "cycle":
        assert path.profiles[-1] == path.profiles[path.cycle_start]
    # every step is a strict improvement for its mover
    profs = path.profiles
    for k, step in enumerate(path.steps):
        i = m.players.index(step.player)
        assert m.payoffs[profs[k + 1]][i] > m.payoffs[profs[k]][i]


# ---------------------------------------------------------------------------
# curve and proposals
# ---------------------------------------------------------------------------

def test_payoff_curve_linear_config():
    curve = WaterSplitCurve(
        agents=("Ethiopia", "Egypt", "Sudan"),
        coeffs=((0.0, 1.0), (50.0, -0.5), (50.0, -0.5)))
    table = payoff_curve(curve)
    assert len(table.shares) == 101
    assert table.shares[0] == 0.0 and table.shares[-1] == 100.0
    assert table.payoffs[40] == (40.0, 30.0, 30.0)
    assert table.monotonicity == ("nondecreasing", "nonincreasing",
                                  "nonincreasing")


def test_payoff_curve_constant_flag():
    curve = WaterSplitCurve(agents=("a",), coeffs=((5.0, 0.0),))
    assert payoff_curve(curve).monotonicity == ("constant",)


def test_proposal_table_rows_checked():
    with pytest.raises(BadRowSum):
        proposal_table(ProposalTable(agents=("a", "b"),
                                     rows=((60.0, 30.0), (50.0, 50.0))))


def test_proposal_table_annotation():
    t = ProposalTable(
        agents=("Ethiopia", "Egypt", "Sudan"),
        rows=((50.0, 30.0, 20.0), (20.0, 55.0, 25.0), (20.0, 35.0, 45.0)))
    ann = proposal_table(t)
    assert ann.favored == (("Ethiopia",), ("Egypt",), ("Sudan",))
    assert ann.intensities[0] == (0.5, 0.3, 0.2)


def test_proposal_table_keeps_ties():
    t = ProposalTable(agents=("a", "b"), rows=((50.0, 50.0), (40.0, 60.0)))
    ann = proposal_table(t)
    assert ann.favored[0] == ("a", "b")
