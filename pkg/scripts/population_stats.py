"""Initial vs final population fitness for growing fire counts.

    python3 scripts/population_stats.py --fires 15 20 25 --runs 5
"""

import argparse
import statistics

from uavfire import GaConfig, ScenarioSpec, evolve, generate


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--fires", type=int, nargs="+", default=[15, 20, 25])
    ap.add_argument("--uavs", type=int, default=5)
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--gens", type=int, default=50)
    args = ap.parse_args()

    print("n  J0_best_min  J0_avg_min  JN_best_min  JN_avg_min  avg_drop_pct")
    for n in args.fires:
        rows = []
        for s in range(args.runs):
            sc = generate(ScenarioSpec(uav_count=args.uavs, fire_count=n, seed=s))
            st = evolve(sc, GaConfig(generations=args.gens, rng_seed=s)).per_generation_stats
            rows.append((st[0].best_j, st[0].avg_j, st[-1].best_j, st[-1].avg_j))
        b0, a0, bn, an = (statistics.fmean(col) / 60.0 for col in zip(*rows))
        print(f"{n:<2} {b0:12.2f} {a0:11.2f} {bn:12.2f} {an:11.2f} {100 * (1 - an / a0):13.1f}")


if __name__ == "__main__":
    main()
