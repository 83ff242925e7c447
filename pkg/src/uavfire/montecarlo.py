"""Monte-Carlo campaigns: fixed fire layout, redrawn radii and UAV starts.

Iteration ``k`` of a campaign depends only on ``(master_seed, k)``, so a
single record can be reproduced without running the others and serial and
parallel runs agree exactly.
"""

from __future__ import annotations

import csv
import json
import math
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace

import numpy as np

from .ga import GaConfig, evolve
from .scenario import ScenarioSpec, generate
from .scheduling import evaluate, fire_expansion_ratios, mission_success

AGGREGATION_NOTES = {
    "mean_completion_time": "successful iterations only",
    "mean_quench_time": "successful iterations only",
    "mean_fer": "all iterations; each iteration averages FER over its feasible fires",
}


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    seed: int
    success: bool
    completion_time_s: float | None
    total_quench_s: float
    mean_fer: float
    best_J: float


@dataclass(frozen=True)
class McMetrics:
    iterations: int
    success_rate: float  # percent
    mean_completion_time: float  # minutes
    mean_quench_time: float  # minutes
    mean_fer: float
    ci95_completion_time: float  # half-widths, same units
    ci95_quench_time: float
    ci95_fer: float


def iteration_seed(master_seed: int, k: int) -> int:
    return int(np.random.SeedSequence([master_seed, k]).generate_state(1, dtype=np.uint64)[0])


def run_iteration(base_spec: ScenarioSpec, k: int, master_seed: int, config: GaConfig) -> IterationRecord:
    seed = iteration_seed(master_seed, k)
    scenario = generate(base_spec, resample_seed=(seed, 0))
    ga_seed = int(np.random.SeedSequence([seed, 1]).generate_state(1, dtype=np.uint64)[0])
    result = evolve(scenario, replace(config, rng_seed=ga_seed))
    ev = evaluate(result.best_chromosome.decode(), scenario, config.kappa)
    ok = mission_success(ev)
    _, fer = fire_expansion_ratios(ev)
    return IterationRecord(
        iteration=k,
        seed=seed,
        success=ok,
        completion_time_s=ev.makespan if ok else None,
        total_quench_s=ev.total_quench,
        mean_fer=fer,
        best_J=ev.fitness,
    )


def _ci95(values: list[float]) -> float:
    if len(values) < 2:
        return 0.0
    return 1.96 * statistics.stdev(values) / math.sqrt(len(values))


def _mean(values: list[float]) -> float:
    return math.fsum(values) / len(values) if values else math.nan


def summarize(records: list[IterationRecord]) -> McMetrics:
    records = sorted(records, key=lambda r: r.iteration)
    won = [r for r in records if r.success]
    completion = [r.completion_time_s / 60.0 for r in won]
    quench = [r.total_quench_s / 60.0 for r in won]
    fer = [r.mean_fer for r in records]
    return McMetrics(
        iterations=len(records),
        success_rate=100.0 * len(won) / len(records),
        mean_completion_time=_mean(completion),
        mean_quench_time=_mean(quench),
        mean_fer=_mean(fer),
        ci95_completion_time=_ci95(completion),
        ci95_quench_time=_ci95(quench),
        ci95_fer=_ci95(fer),
    )


def run_campaign(
    base_spec: ScenarioSpec,
    iterations: int,
    master_seed: int,
    config: GaConfig = GaConfig(),
    workers: int = 1,
) -> tuple[McMetrics, list[IterationRecord]]:
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    ks = range(iterations)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            records = list(
                pool.map(run_iteration, [base_spec] * iterations, ks, [master_seed] * iterations, [config] * iterations)
            )
    else:
        records = [run_iteration(base_spec, k, master_seed, config) for k in ks]
    return summarize(records), records


def records_jsonl(records: list[IterationRecord]) -> str:
    return "".join(json.dumps(asdict(r)) + "\n" for r in records)


def summary_json(metrics: McMetrics, base_spec: ScenarioSpec, master_seed: int) -> str:
    doc = {
        "metrics": asdict(metrics),
        "units": {"mean_completion_time": "min", "mean_quench_time": "min", "success_rate": "percent"},
        "aggregation": AGGREGATION_NOTES,
        "fires": base_spec.fire_count,
        "uavs": base_spec.uav_count,
        "master_seed": master_seed,
    }
    return json.dumps(doc, indent=2, allow_nan=True) + "\n"


TABLE_COLUMNS = ("n", "success_rate_pct", "mean_completion_time_min", "mean_quench_time_min", "mean_fer")


def write_table_csv(rows: list[tuple[int, McMetrics]], fh) -> None:
    """One row per fire count, laid out like the usual campaign summary table."""
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for n, m in rows:
        w.writerow([n, f"{m.success_rate:.2f}", f"{m.mean_completion_time:.2f}", f"{m.mean_quench_time:.2f}", f"{m.mean_fer:.2f}"])
