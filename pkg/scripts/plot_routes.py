"""Solve one random scenario and draw the GA and baseline routes side by side as SVG files.

    python3 scripts/plot_routes.py --seed 3 --outdir figures
"""

import argparse
from pathlib import Path

from uavfire import GaConfig, ScenarioSpec, evaluate, evolve, generate
from uavfire.baselines import METHODS
from uavfire.plotting import plot_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--uavs", type=int, default=5)
    ap.add_argument("--fires", type=int, default=15)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    sc = generate(ScenarioSpec(uav_count=args.uavs, fire_count=args.fires, seed=args.seed))
    plans = {"ga": evolve(sc, GaConfig(rng_seed=args.seed)).best_chromosome.decode()}
    plans.update((name, fn(sc)) for name, fn in METHODS.items())
    for name, plan in plans.items():
        ev = evaluate(plan, sc)
        title = f"{name}: J = {ev.fitness:.1f} s, lost {ev.infeasible_count}/{sc.n_fires}"
        path = out / f"routes_{name}.svg"
        path.write_text(plot_svg(plan, sc, title=title))
        print(f"{path}  {title}")


if __name__ == "__main__":
    main()
