"""Compute the reference values that the test suite pins as literals.

Everything here is derived from hand-written closed forms and the brute
oracles in tests/oracles.py, not from the package modules, so the numbers
can be frozen into tests as independent expectations.  Run from the repo
root:

    python scripts/pin_oracle_values.py
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import (aw2_scan, awn_reference, bisect_leftmost,
                     maximin_fine_oracle, simpson_mass)

# Hand-written normalized densities and cumulatives for the river scenario.
# Upstream ramp: v = 2x, C(x) = x^2.
# Downstream ramp: v = 2(1 - x), C(x) = 2x - x^2.
# Third party: v = 1 + 0.5 sin(6 pi x), C(x) = x + (1 - cos(6 pi x)) / (12 pi).

E_DENS = lambda x: 2.0 * x
A_DENS = lambda x: 2.0 * (1.0 - x)
S_DENS = lambda x: 1.0 + 0.5 * np.sin(6.0 * math.pi * x)

E_CUM = lambda x: x * x
A_CUM = lambda x: 2.0 * x - x * x
S_CUM = lambda x: x + (1.0 - math.cos(6.0 * math.pi * x)) / (12.0 * math.pi)


def quantile(cum, t):
    return bisect_leftmost(lambda x: cum(x) >= t, 0.0, 1.0)


def main() -> int:
    print("== sinusoid mass on [0, 0.2], Simpson 1e5 panels ==")
    print(repr(simpson_mass(S_DENS, 0.0, 0.2, panels=100_000)))

    print("== sinusoid median (t = 0.5), bisection on Simpson cumulative ==")
    med = bisect_leftmost(
        lambda x: simpson_mass(S_DENS, 0.0, x, panels=4096) >= 0.5, 0.0, 1.0)
    print(repr(med))

    print("== ten-interval bid vectors (x100) ==")
    for name, dens in (("E", E_DENS), ("A", A_DENS), ("S", S_DENS)):
        bids = [100.0 * simpson_mass(dens, k / 10, (k + 1) / 10, panels=20_000)
                for k in range(10)]
        print(name, [round(b, 12) for b in bids], "sum", round(sum(bids), 9))

    print("== three-agent cut-and-choose payoff-by-cutter table ==")
    agents = [("E", E_CUM), ("A", A_CUM), ("S", S_CUM)]
    for ci, (cname, ccum) in enumerate(agents):
        x1 = quantile(ccum, 1.0 / 3.0)
        x2 = quantile(ccum, 2.0 / 3.0)
        pieces = [(0.0, x1), (x1, x2), (x2, 1.0)]
        vals = {n: [c(b) - c(a) for a, b in pieces] for n, c in agents}
        choosers = [n for n, _ in agents if n != cname]
        pref = {n: max(range(3), key=lambda k: (vals[n][k], -k)) for n in choosers}
        taken = {}
        if pref[choosers[0]] == pref[choosers[1]]:
            taken[choosers[0]] = pref[choosers[0]]
            rest = [k for k in range(3) if k != pref[choosers[0]]]
            taken[choosers[1]] = max(rest, key=lambda k: (vals[choosers[1]][k], -k))
        else:
            taken[choosers[0]] = pref[choosers[0]]
            taken[choosers[1]] = pref[choosers[1]]
        taken[cname] = ({0, 1, 2} - set(taken.values())).pop()
        payoffs = {n: vals[n][taken[n]] for n, _ in agents}
        print(f"cutter {cname}: cuts=({x1!r}, {x2!r}) pieces_taken={taken} "
              f"payoffs={ {n: round(p, 12) for n, p in payoffs.items()} }")
        if cname == "E":
            print("   chooser piece values:",
                  {n: [round(v, 12) for v in vals[n]] for n in choosers})

    print("== trim-and-choose walkthrough (uniform, 2x, 2(1-x)) ==")
    C1 = lambda x: x
    C2 = lambda x: x * x
    C3 = lambda x: 2.0 * x - x * x
    x1, x2 = 1.0 / 3.0, 2.0 / 3.0
    m2 = [C2(x1), C2(x2) - C2(x1), 1.0 - C2(x2)]
    order = sorted(range(3), key=lambda k: -m2[k])
    jmax, second = order[0], m2[order[1]]
    # kept part of the trimmed piece keeps exactly the second-largest value
    y = math.sqrt(second + C2(x2))  # C2(y) - C2(2/3) = second
    print("cuts", (x1, x2), "trim piece", jmax, "trim point", repr(y),
          "= sqrt(7)/3", repr(math.sqrt(7.0) / 3.0))
    m3 = [C3(x1), C3(x2) - C3(x1), C3(y) - C3(x2)]
    print("agent3 piece values", m3, "-> picks", max(range(3), key=lambda k: (m3[k], -k)))
    # agent3 takes piece 0; agent2 must take trimmed piece 2; agent1 takes 1
    # agent3 (did not take trimmed piece) trisects T = [y, 1] by own measure
    tmass = 1.0 - C3(y)
    z1 = bisect_leftmost(lambda z: C3(z) - C3(y) >= tmass / 3.0, y, 1.0)
    z2 = bisect_leftmost(lambda z: C3(z) - C3(y) >= 2.0 * tmass / 3.0, y, 1.0)
    print("T", (y, 1.0), "mass under v3", repr(tmass), "cuts", repr(z1), repr(z2))
    t_edges = [(y, z1), (z1, z2), (z2, 1.0)]
    t2 = [C2(b) - C2(a) for a, b in t_edges]
    pick2 = max(range(3), key=lambda k: (t2[k], -k))
    rest = [k for k in range(3) if k != pick2]
    t1 = [C1(b) - C1(a) for a, b in t_edges]
    pick1 = max(rest, key=lambda k: (t1[k], -k))
    pick3 = ({0, 1, 2} - {pick2, pick1}).pop()
    print("T sub-values v2", t2, "picks: agent2", pick2, "agent1", pick1, "agent3", pick3)
    p1 = (x2 - x1) + (t_edges[pick1][1] - t_edges[pick1][0])
    p2 = (C2(y) - C2(x2)) + t2[pick2]
    p3 = C3(x1) + (C3(t_edges[pick3][1]) - C3(t_edges[pick3][0]))
    print("payoffs", repr(p1), repr(p2), repr(p3))

    print("== two-party point equalization, bids (70,30) vs (50,50), scan ==")
    print(aw2_scan([70, 30], [50, 50]))

    print("== river ten-interval bids through n-party heuristic ==")
    ebids = [100.0 * (E_CUM((k + 1) / 10) - E_CUM(k / 10)) for k in range(10)]
    abids = [100.0 * (A_CUM((k + 1) / 10) - A_CUM(k / 10)) for k in range(10)]
    sbids = [100.0 * (S_CUM((k + 1) / 10) - S_CUM(k / 10)) for k in range(10)]
    ref = awn_reference([ebids, abids, sbids])
    print("totals", [repr(t) for t in ref["totals"]])

    print("== contiguous maximin references ==")
    two = maximin_fine_oracle([E_CUM, A_CUM], assignment_search=True)
    print("two-agent (2x vs 2(1-x)):", two)
    ident = maximin_fine_oracle([C1, C1, C1], assignment_search=False)
    print("identical uniform trio:", ident)
    nile = maximin_fine_oracle([E_CUM, A_CUM, S_CUM], assignment_search=True)
    print("river trio:", nile)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
