#!/usr/bin/env python3
"""Regenerate all five demonstration experiments and print their metrics.

Equivalent to running ``phasekit repro N`` for N = 1..5; artifacts (plot-ready
CSV sweeps plus summary.json per example) land under --outdir.
"""
import argparse
import json
from pathlib import Path

from phasekit import __version__
from phasekit.repro import run_example


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="results", help="artifact directory")
    parser.add_argument("--examples", type=int, nargs="*", default=[1, 2, 3, 4, 5])
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    header = {"tool": f"phasekit {__version__}", "command": "scripts/run_examples.py"}
    collected = {}
    for number in args.examples:
        metrics = run_example(number, outdir, dict(header, command=f"repro {number}"))
        collected[f"example{number}"] = metrics
        for key, value in metrics.items():
            print(f"example {number}: {key} = {value:.6e}")
    with open(outdir / "all_metrics.json", "w", newline="\n") as fh:
        json.dump(collected, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"artifacts written under {outdir}/")


if __name__ == "__main__":
    main()
