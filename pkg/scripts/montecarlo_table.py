"""Monte-Carlo campaigns for several fire counts, written as a summary table.

    python3 scripts/montecarlo_table.py --iterations 100 --csv table.csv
"""

import argparse
import sys

from uavfire import GaConfig, ScenarioSpec
from uavfire.montecarlo import run_campaign, write_table_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--fires", type=int, nargs="+", default=[15, 20, 25])
    ap.add_argument("--uavs", type=int, default=5)
    ap.add_argument("--iterations", type=int, default=100)
    ap.add_argument("--layout-seed", type=int, default=2024)
    ap.add_argument("--master-seed", type=int, default=7)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--csv", help="write the table here instead of stdout")
    args = ap.parse_args()

    rows = []
    for n in args.fires:
        spec = ScenarioSpec(uav_count=args.uavs, fire_count=n, seed=args.layout_seed)
        metrics, _ = run_campaign(spec, args.iterations, args.master_seed, GaConfig(), workers=args.workers)
        rows.append((n, metrics))
        print(f"n={n} done: {metrics.success_rate:.0f}% success", file=sys.stderr)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_table_csv(rows, fh)
    else:
        write_table_csv(rows, sys.stdout)


if __name__ == "__main__":
    main()
