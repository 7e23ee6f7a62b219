"""Run verify over the default (m, r) sweep and print a summary table.

    python3 scripts/run_sweep.py [--jobs N] [--json sweep.json]
"""

import argparse
import os
import sys
from pathlib import Path

from yukawa_length.report import DEFAULT_SWEEP, Scenario, cmd_sweep, dumps


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", type=Path, help="also write the full report here")
    args = ap.parse_args()

    report = cmd_sweep(Scenario(m=4, r=2, seed=args.seed), DEFAULT_SWEEP, jobs=args.jobs, timings=True)
    header = f"{'m':>3} {'r':>3} {'n':>3} {'m/r-1':>6} {'src':>4} {'tgt':>4} {'length':>7} {'seconds':>8}"
    print(header)
    print("-" * len(header))
    for res in report["results"]:
        p, jac = res["params"], res["jacobian"]
        secs = sum(res["timings"].values())
        print(
            f"{p['m']:>3} {p['r']:>3} {p['n']:>3} {p['m_over_r_minus_1']:>6} "
            f"{jac['source']['dim']:>4} {jac['target']['dim']:>4} {res['length']:>7} {secs:>8.2f}"
        )
    print(f"\nall pass: {report['pass']}")
    if args.json:
        args.json.write_text(dumps(report))
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
