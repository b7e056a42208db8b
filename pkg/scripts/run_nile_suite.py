"""Run every report and plot-data command on the Nile scenario.

Writes one file per command and format into the output directory.  Useful
as a smoke run and as the input for byte-level determinism checks: two
invocations into different directories must produce identical trees.

    python3 scripts/run_nile_suite.py --out out/nile
    python3 scripts/run_nile_suite.py --out out/nile2 && diff -r out/nile out/nile2
"""

from __future__ import annotations

import argparse
from pathlib import Path

from cakeshare.cli import main as cli

COMMANDS = [
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
PLOT_KINDS = ["densities", "payoffs-by-cutter", "water-curve",
              "proposal-heatmap"]


def run(outdir: Path, scenario: str = "nile") -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for i, argv in enumerate(COMMANDS):
        for fmt, ext in (("human", "txt"), ("machine", "json")):
            stem = f"{i:02d}_{'_'.join(argv).replace('--', '').replace('/', '-')}"
            target = outdir / f"{stem}.{ext}"
            code = cli(argv + ["--scenario", scenario,
                               "--format", fmt, "--out", str(target)])
            if code != 0:
                raise SystemExit(f"{argv} exited {code}")
    for kind in PLOT_KINDS:
        target = outdir / f"plot_{kind}.tsv"
        code = cli(["plot-data", "--kind", kind, "--scenario", scenario,
                    "--out", str(target)])
        if code != 0:
            raise SystemExit(f"plot-data {kind} exited {code}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument("--scenario", default="nile")
    args = parser.parse_args()
    run(Path(args.out), args.scenario)
    print(f"wrote {len(COMMANDS) * 2 + len(PLOT_KINDS)} files to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
