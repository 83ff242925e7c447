"""Command-line entry point: generate, solve, verify, baseline, montecarlo."""

from __future__ import annotations

import argparse
import io
import json
import sys
from pathlib import Path

from . import planfile
from . import scenario as scen
from .baselines import METHODS
from .chromosome import ChromosomeError
from .fire_model import FireParams
from .ga import GaConfig, evolve, write_stats_csv
from .montecarlo import records_jsonl, run_campaign, summarize, write_table_csv
from .plotting import plot_svg
from .scheduling import DEFAULT_KAPPA, PlanMismatchError, evaluate, mission_success

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _spec_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--uavs", type=int, default=5)
    p.add_argument("--radius-min", type=float, default=5.0)
    p.add_argument("--radius-max", type=float, default=15.0)
    p.add_argument("--spread-rate", type=float, default=0.05)
    p.add_argument("--quench-rate", type=float, default=20.0)
    p.add_argument("--speed", type=float, default=20.0)
    p.add_argument("--width", type=float, default=1000.0)
    p.add_argument("--height", type=float, default=1000.0)
    p.add_argument("--uav-placement", choices=("scatter", "base"), default="scatter")


def _ga_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pop", type=int, default=10)
    p.add_argument("--gens", type=int, default=50)
    p.add_argument("--cx", type=float, default=0.8)
    p.add_argument("--mu", type=float, default=0.01)
    p.add_argument("--gamma", type=float, default=0.2)
    p.add_argument("--elites", type=int, default=5)
    p.add_argument("--kappa", type=float, default=DEFAULT_KAPPA)
    p.add_argument("--seed-greedy", action=argparse.BooleanOptionalAction, default=True)


def _ga_config(a, seed: int = 0) -> GaConfig:
    return GaConfig(
        population_size=a.pop,
        generations=a.gens,
        crossover_prob=a.cx,
        mutation_prob=a.mu,
        infeasibility_threshold=a.gamma,
        elite_count=a.elites,
        kappa=a.kappa,
        seed_greedy=a.seed_greedy,
        rng_seed=seed,
    )


def _spec(a, fires: int, seed: int) -> scen.ScenarioSpec:
    return scen.ScenarioSpec(
        width=a.width,
        height=a.height,
        uav_count=a.uavs,
        fire_count=fires,
        radius_min=a.radius_min,
        radius_max=a.radius_max,
        params=FireParams(a.spread_rate, a.quench_rate, a.speed),
        seed=seed,
        uav_placement=a.uav_placement,
    )


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_scenario(path: str) -> scen.Scenario:
    try:
        return scen.load(path)
    except OSError as exc:
        raise InputError(f"cannot read scenario {path}: {exc}") from exc


def _report_infeasible(ev) -> None:
    lost = [t for t in ev.timings.values() if not t.feasible]
    print(f"{len(lost)} of {ev.n_fires} fires cannot be reached before their deadline:", file=sys.stderr)
    for t in lost:
        print(
            f"  fire {t.fire_id} (UAV {t.uav_id}): start {t.start_time:.1f} s >= deadline {t.deadline:.1f} s",
            file=sys.stderr,
        )


def _emit_plan(a, plan, sc, **extra) -> int:
    ev = evaluate(plan, sc, getattr(a, "kappa", DEFAULT_KAPPA))
    _write(a.output, planfile.dumps(plan, ev, **extra))
    if getattr(a, "plot", None):
        Path(a.plot).write_text(plot_svg(plan, sc))
    print(
        f"fitness {ev.fitness:.3f} s, total quench {ev.total_quench:.3f} s, "
        f"makespan {ev.makespan:.3f} s, infeasible {ev.infeasible_count}/{ev.n_fires}",
        file=sys.stderr,
    )
    if not mission_success(ev):
        _report_infeasible(ev)
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_generate(a) -> int:
    sc = scen.generate(_spec(a, a.fires, a.seed))
    _write(a.output, scen.dumps(sc))
    return EXIT_OK


def cmd_solve(a) -> int:
    sc = _load_scenario(a.scenario)
    result = evolve(sc, _ga_config(a, a.seed))
    if a.stats:
        with open(a.stats, "w", newline="") as fh:
            write_stats_csv(result.per_generation_stats, fh)
    return _emit_plan(a, result.best_chromosome.decode(), sc, seed=a.seed)


def cmd_baseline(a) -> int:
    sc = _load_scenario(a.scenario)
    return _emit_plan(a, METHODS[a.method](sc), sc, method=a.method)


def cmd_verify(a) -> int:
    from .oracle import replay_plan

    sc = _load_scenario(a.scenario)
    try:
        plan = planfile.load(a.plan)
    except OSError as exc:
        raise InputError(f"cannot read plan {a.plan}: {exc}") from exc
    ev = evaluate(plan, sc)
    rows = replay_plan(plan, sc, step=a.step)
    agree = True
    print("fire uav   start_s  deadline_s  quench_s(closed)  quench_s(ode)  feasible")
    for r in rows:
        t = ev.timings[r.fire_id]
        same = t.feasible == r.feasible
        agree &= same
        q_closed = f"{t.quench_duration:.4f}" if t.feasible else "-"
        q_ode = f"{r.quench_duration:.4f}" if r.feasible else "-"
        flag = "yes" if r.feasible else "NO"
        print(
            f"{r.fire_id:4d} {r.uav_id:3d} {r.start_time:9.2f} {t.deadline:11.2f} "
            f"{q_closed:>17} {q_ode:>14}  {flag}{'' if same else '  (closed form disagrees)'}"
        )
    lost = sum(not r.feasible for r in rows)
    print(f"{len(rows) - lost}/{len(rows)} fires mitigated before their deadline")
    return EXIT_OK if lost == 0 and agree else EXIT_INFEASIBLE


def cmd_montecarlo(a) -> int:
    cfg = _ga_config(a)
    lines, rows, summaries = [], [], []
    for n in a.fires:
        spec = _spec(a, n, a.layout_seed)
        metrics, records = run_campaign(spec, a.iterations, a.master_seed, cfg, workers=a.workers)
        rows.append((n, metrics))
        for line in records_jsonl(records).splitlines():
            rec = json.loads(line)
            rec["fires"] = n
            lines.append(json.dumps(rec) + "\n")
        summaries.append({"fires": n, "uavs": a.uavs, "metrics": metrics.__dict__})
        print(
            f"n={n}: success {metrics.success_rate:.1f}%, completion {metrics.mean_completion_time:.2f} min, "
            f"quench {metrics.mean_quench_time:.2f} min, FER {metrics.mean_fer:.2f}",
            file=sys.stderr,
        )
    if a.output:
        _write(a.output, "".join(lines))
    if a.summary:
        from .montecarlo import AGGREGATION_NOTES

        doc = {
            "master_seed": a.master_seed,
            "layout_seed": a.layout_seed,
            "iterations": a.iterations,
            "aggregation": AGGREGATION_NOTES,
            "units": {"mean_completion_time": "min", "mean_quench_time": "min", "success_rate": "percent"},
            "campaigns": summaries,
        }
        _write(a.summary, json.dumps(doc, indent=2) + "\n")
    if a.csv:
        buf = io.StringIO()
        write_table_csv(rows, buf)
        _write(a.csv, buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uavfire", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a random scenario")
    _spec_args(g)
    g.add_argument("--fires", type=int, default=15)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", help="run the genetic algorithm on a scenario")
    s.add_argument("scenario")
    _ga_args(s)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.add_argument("--stats", help="per-generation CSV")
    s.add_argument("--plot", help="SVG route map")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="replay a plan with the ODE integrator")
    v.add_argument("plan")
    v.add_argument("scenario")
    v.add_argument("--step", type=float, default=1e-3)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("baseline", help="solve with a constructive heuristic")
    b.add_argument("scenario")
    b.add_argument("--method", choices=sorted(METHODS), default="greedy")
    b.add_argument("-o", "--output")
    b.add_argument("--plot")
    b.set_defaults(func=cmd_baseline)

    m = sub.add_parser("montecarlo", help="Monte-Carlo campaign over radii and UAV starts")
    _spec_args(m)
    _ga_args(m)
    m.add_argument("--fires", type=int, nargs="+", default=[15])
    m.add_argument("--iterations", type=int, default=100)
    m.add_argument("--master-seed", type=int, default=0)
    m.add_argument("--layout-seed", type=int, default=0, help="seed for the fixed fire positions")
    m.add_argument("--workers", type=int, default=1)
    m.add_argument("-o", "--output", help="per-iteration JSONL")
    m.add_argument("--summary", help="summary JSON")
    m.add_argument("--csv", help="summary table CSV")
    m.set_defaults(func=cmd_montecarlo)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, scen.ScenarioError, planfile.PlanFileError, PlanMismatchError, ChromosomeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
