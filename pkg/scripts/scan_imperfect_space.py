"""Exhaustive scan of tenths-grid 3x3 instances for the no-perfect target.

Companion to find_imperfect_instance.py: walk every three-good instance
whose rows are nonnegative tenths summing to one, and record all instances
where {efficient, equitable} and {envy-free, equitable} are satisfiable
but no candidate is all three.  Zero hits is the expected outcome; it is
why the shipped instance uses four goods.  Vectorized throughout.
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent))

from find_imperfect_instance import enumerate_fraction_matrices

EQ_TOL = 1e-6
EF_TOL = 1e-9
DOM_EPS = 1e-12


def main() -> int:
    mats = enumerate_fraction_matrices(3, 3)  # (C, n, m)
    C = len(mats)
    matsT = np.ascontiguousarray(mats.transpose(2, 0, 1).reshape(3, C * 3))
    comps = [(a / 10, b / 10, (10 - a - b) / 10)
             for a in range(11) for b in range(11 - a)]
    hits = []
    total = 0
    for r1 in comps:
        for r2 in comps:
            if r2 < r1:
                continue  # agent order is irrelevant to the target properties
            for r3 in comps:
                if r3 < r2:
                    continue
                total += 1
                V = np.array([r1, r2, r3])
                cross = (V @ matsT).reshape(3, C, 3).transpose(1, 0, 2)
                own = cross[:, np.arange(3), np.arange(3)]
                eq = (own.max(axis=1) - own.min(axis=1)) <= EQ_TOL
                if not eq.any():
                    continue
                ef = (cross - own[:, :, None]).max(axis=(1, 2)) <= EF_TOL
                eq_idx = np.where(eq)[0]
                eff_eq = []
                ef_eq = []
                perfect = False
                for c in eq_idx:
                    t = own[c]
                    dom = bool(np.any(np.all(own >= t - DOM_EPS, axis=1)
                                      & np.any(own > t + DOM_EPS, axis=1)))
                    if not dom:
                        eff_eq.append(c)
                    if ef[c]:
                        ef_eq.append(c)
                        if not dom:
                            perfect = True
                            break
                if perfect or not eff_eq or not ef_eq:
                    continue
                hits.append((r1, r2, r3))
                print("HIT", r1, r2, r3, flush=True)
    print(f"scanned {total} instances, hits: {len(hits)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
