"""Replay a route plan against a scenario: start times, quench times, fitness.

Each UAV flies its route in order at constant speed along straight lines.
A fire is serviceable only if the UAV arrives strictly before the fire's
deadline; otherwise it costs the penalty ``kappa`` in the fitness and the UAV
passes through without stopping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .chromosome import RoutePlan
from .fire_model import InfeasibleTaskError, deadline_time, quench_time
from .scenario import Scenario

DEFAULT_KAPPA = 1e6


class PlanMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class TaskTiming:
    fire_id: int
    uav_id: int
    start_time: float
    deadline: float
    quench_duration: float  # kappa when infeasible
    completion_time: float
    feasible: bool
    area_at_start: float

    @property
    def slack(self) -> float:
        return self.deadline - self.start_time


@dataclass(frozen=True)
class ScheduleEvaluation:
    timings: Mapping[int, TaskTiming]  # keyed by fire id
    fitness: float
    infeasible_count: int
    infeasible_ratio: float
    makespan: float
    total_quench: float  # feasible tasks only, no penalty
    per_fire_fer: Mapping[int, float]

    @property
    def n_fires(self) -> int:
        return len(self.timings)


class Evaluator:
    """Precomputed distances and deadlines for repeated evaluation of one scenario."""

    def __init__(self, scenario: Scenario, kappa: float = DEFAULT_KAPPA):
        self.scenario = scenario
        self.kappa = float(kappa)
        p = scenario.params
        self.params = p
        fire_xy = np.array([f.position for f in scenario.fires], dtype=float).reshape(-1, 2)
        uav_xy = np.array([u.position for u in scenario.uavs], dtype=float).reshape(-1, 2)
        # index 0 is unused so fire ids index directly
        pad = np.vstack([np.zeros((1, 2)), fire_xy])
        v = p.uav_speed
        self.fire_travel = (np.linalg.norm(pad[:, None, :] - pad[None, :, :], axis=-1) / v).tolist()
        self.uav_travel = (np.linalg.norm(uav_xy[:, None, :] - pad[None, :, :], axis=-1) / v).tolist()
        self.sqrt_a0 = [0.0] + [math.sqrt(f.initial_area) for f in scenario.fires]
        self.a0 = [0.0] + [f.initial_area for f in scenario.fires]
        self.deadline = [0.0] + [deadline_time(f.initial_area, p) for f in scenario.fires]
        self.growth_speed = math.sqrt(math.pi) * p.spread_rate  # d sqrt(A)/dt

    def _walk(self, routes: Sequence[Sequence[int]], record: bool):
        kappa = self.kappa
        deadline = self.deadline
        sqrt_a0 = self.sqrt_a0
        c = self.growth_speed
        params = self.params
        fitness = 0.0
        n_bad = 0
        min_slack = math.inf
        min_slack_fire = 0
        rows = []
        for i, route in enumerate(routes):
            t = 0.0
            travel = self.uav_travel[i]
            for j in route:
                start = t + travel[j]
                slack = deadline[j] - start
                if slack < min_slack:
                    min_slack, min_slack_fire = slack, j
                root = sqrt_a0[j] + c * start
                area = root * root
                feasible = slack > 0
                if feasible:
                    try:
                        q = quench_time(area, params)
                    except InfeasibleTaskError:
                        feasible = False
                if feasible:
                    t = start + q
                else:
                    q = kappa
                    t = start
                    n_bad += 1
                fitness += q
                if record:
                    rows.append((j, i + 1, start, deadline[j], q, t, feasible, area))
                travel = self.fire_travel[j]
        return fitness, n_bad, min_slack_fire, rows

    def quick(self, routes: Sequence[Sequence[int]]) -> tuple[float, int, int]:
        """(fitness, infeasible count, fire id with least deadline slack)"""
        fitness, n_bad, worst, _ = self._walk(routes, record=False)
        return fitness, n_bad, worst

    def evaluate(self, plan: RoutePlan) -> ScheduleEvaluation:
        s = self.scenario
        if len(plan.routes) != s.n_uavs:
            raise PlanMismatchError(f"plan has {len(plan.routes)} routes for {s.n_uavs} UAVs")
        ids = sorted(j for r in plan.routes for j in r)
        if ids != list(range(1, s.n_fires + 1)):
            raise PlanMismatchError("plan does not visit every fire exactly once")
        fitness, n_bad, _, rows = self._walk(plan.routes, record=True)
        timings = {row[0]: TaskTiming(*row) for row in rows}
        feasible = [tt for tt in timings.values() if tt.feasible]
        fer = {
            tt.fire_id: (tt.area_at_start - self.a0[tt.fire_id]) / self.a0[tt.fire_id] for tt in feasible
        }
        n = s.n_fires
        return ScheduleEvaluation(
            timings=dict(sorted(timings.items())),
            fitness=fitness,
            infeasible_count=n_bad,
            infeasible_ratio=n_bad / n if n else 0.0,
            makespan=max((tt.completion_time for tt in feasible), default=0.0),
            total_quench=math.fsum(tt.quench_duration for tt in feasible),
            per_fire_fer=dict(sorted(fer.items())),
        )


def evaluate(plan: RoutePlan, scenario: Scenario, kappa: float = DEFAULT_KAPPA) -> ScheduleEvaluation:
    return Evaluator(scenario, kappa).evaluate(plan)


def fire_expansion_ratios(ev: ScheduleEvaluation, scenario: Scenario | None = None) -> tuple[dict[int, float], float]:
    """Per-fire growth ratio at mitigation start, and its mean over feasible fires."""
    ratios = dict(ev.per_fire_fer)
    if scenario is not None:
        ratios = {
            j: (ev.timings[j].area_at_start - scenario.fire(j).initial_area) / scenario.fire(j).initial_area
            for j in ratios
        }
    mean = math.fsum(ratios.values()) / len(ratios) if ratios else 0.0
    return ratios, mean


def mission_success(ev: ScheduleEvaluation) -> bool:
    return ev.infeasible_count == 0
