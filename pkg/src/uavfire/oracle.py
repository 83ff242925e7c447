"""Independent ground truth: numerical fire dynamics and brute-force routing.

Nothing here uses the closed forms in :mod:`uavfire.fire_model`; the ODE is
integrated directly so the two can check each other.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numba import njit

from .chromosome import RoutePlan, TwoPartChromosome
from .fire_model import FireParams
from .scenario import Scenario
from .scheduling import evaluate


class TerminalEvent(str, Enum):
    EXTINGUISHED = "extinguished"
    REACHED_CRITICAL = "reached_critical"
    HORIZON = "horizon"


@dataclass(frozen=True)
class OdeTrace:
    times: np.ndarray
    areas: np.ndarray
    terminal_event: TerminalEvent

    @property
    def end_time(self) -> float:
        return float(self.times[-1])


@njit(cache=True)
def _rhs(area, growth, quench):
    return growth * math.sqrt(max(area, 0.0)) - quench


@njit(cache=True)
def _rk4_run(area0, growth, quench, critical, step, horizon, record_every):
    # returns (t_end, event_code, sample_times, sample_areas)
    # event codes: 0 extinguished, 1 reached critical, 2 horizon
    n_max = int(math.ceil(horizon / step)) + 1
    n_samples = n_max // record_every + 2
    ts = np.empty(n_samples)
    As = np.empty(n_samples)
    ts[0] = 0.0
    As[0] = area0
    k = 1
    if quench > 0.0 and area0 <= 0.0:
        return 0.0, 0, ts[:1], As[:1]
    if area0 >= critical:
        return 0.0, 1, ts[:1], As[:1]
    t = 0.0
    a = area0
    i = 0
    while t < horizon:
        h = min(step, horizon - t)
        k1 = _rhs(a, growth, quench)
        k2 = _rhs(a + 0.5 * h * k1, growth, quench)
        k3 = _rhs(a + 0.5 * h * k2, growth, quench)
        k4 = _rhs(a + h * k3, growth, quench)
        a_new = a + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t_new = t + h
        i += 1
        if quench > 0.0 and a_new <= 0.0:
            t_cross = t + h * a / (a - a_new)
            ts[k] = t_cross
            As[k] = 0.0
            return t_cross, 0, ts[: k + 1], As[: k + 1]
        if a_new >= critical:
            t_cross = t + h * (critical - a) / (a_new - a)
            ts[k] = t_cross
            As[k] = critical
            return t_cross, 1, ts[: k + 1], As[: k + 1]
        t = t_new
        a = a_new
        if i % record_every == 0 and k < n_samples - 1:
            ts[k] = t
            As[k] = a
            k += 1
    ts[k] = t
    As[k] = a
    return t, 2, ts[: k + 1], As[: k + 1]


def integrate_fire(
    initial_area: float,
    params: FireParams,
    quench_active: bool,
    step: float = 1e-3,
    horizon: float = 1e5,
    record_every: int = 1000,
) -> OdeTrace:
    """Fixed-step RK4 of the fire-area ODE until extinguished, critical or horizon.

    Crossing times for both terminal events are linearly interpolated inside
    the final step. ``record_every`` thins the stored samples.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if initial_area < 0:
        raise ValueError("initial_area must be non-negative")
    growth = 2.0 * math.sqrt(math.pi) * params.spread_rate
    quench = params.quench_rate if quench_active else 0.0
    # critical area from the balance condition growth*sqrt(A) = quench_rate
    critical = (params.quench_rate / growth) ** 2
    _, code, ts, As = _rk4_run(
        float(initial_area), growth, quench, critical, float(step), float(horizon), int(record_every)
    )
    event = (TerminalEvent.EXTINGUISHED, TerminalEvent.REACHED_CRITICAL, TerminalEvent.HORIZON)[code]
    return OdeTrace(times=ts.copy(), areas=As.copy(), terminal_event=event)


def extinguish_time(area: float, params: FireParams, step: float = 1e-3, horizon: float = 1e6) -> float:
    trace = integrate_fire(area, params, quench_active=True, step=step, horizon=horizon, record_every=1 << 30)
    if trace.terminal_event is not TerminalEvent.EXTINGUISHED:
        return math.inf
    return trace.end_time


def time_to_critical(area: float, params: FireParams, step: float = 1e-3, horizon: float = 1e6) -> float:
    trace = integrate_fire(area, params, quench_active=False, step=step, horizon=horizon, record_every=1 << 30)
    if trace.terminal_event is not TerminalEvent.REACHED_CRITICAL:
        return math.inf
    return trace.end_time


def plan_count(n: int, m: int) -> int:
    """Number of ordered partitions of n labelled fires into m nonempty routes."""
    return math.factorial(n) * math.comb(n - 1, m - 1)


def enumerate_chromosomes(n: int, m: int):
    """All valid chromosomes, in lexicographic (task_order, route_lengths) order."""
    compositions = [
        tuple(b - a for a, b in zip((0,) + cuts, cuts + (n,)))
        for cuts in itertools.combinations(range(1, n), m - 1)
    ]
    compositions.sort()
    for order in itertools.permutations(range(1, n + 1)):
        for lengths in compositions:
            yield TwoPartChromosome(order, lengths)


def exhaustive_best_plan(
    scenario: Scenario, kappa: float = 1e6, max_n: int = 8, max_m: int = 3
) -> tuple[RoutePlan, float]:
    n, m = scenario.n_fires, scenario.n_uavs
    if n > max_n or m > max_m:
        raise ValueError(f"instance n={n}, m={m} exceeds exhaustive limits n<={max_n}, m<={max_m}")
    best = None
    best_fitness = math.inf
    for chrom in enumerate_chromosomes(n, m):
        plan = chrom.decode()
        fitness = evaluate(plan, scenario, kappa).fitness
        # strict < keeps the lexicographically first among ties
        if fitness < best_fitness:
            best, best_fitness = plan, fitness
    return best, best_fitness


@dataclass(frozen=True)
class ReplayRow:
    fire_id: int
    uav_id: int
    start_time: float
    area_at_start: float
    feasible: bool
    quench_duration: float  # 0 for fires that were lost before arrival


def replay_plan(plan: RoutePlan, scenario: Scenario, step: float = 1e-3) -> list[ReplayRow]:
    """Fly the plan with every fire advanced by numerical integration only.

    A fire counts as lost if growth integration reaches the critical area
    at or before the UAV's arrival; lost fires take no service time.
    """
    p = scenario.params
    rows = []
    for i, route in enumerate(plan.routes, start=1):
        t = 0.0
        here = scenario.uav(i).position
        for j in route:
            fire = scenario.fire(j)
            t += math.dist(here, fire.position) / p.uav_speed
            here = fire.position
            growth = integrate_fire(fire.initial_area, p, False, step=step, horizon=t, record_every=1 << 30)
            if growth.terminal_event is not TerminalEvent.HORIZON and t > 0:
                rows.append(ReplayRow(j, i, t, float(growth.areas[-1]), False, 0.0))
                continue
            area = float(growth.areas[-1])
            q = extinguish_time(area, p, step=min(step, max(area / p.quench_rate, 1e-9) / 1e3))
            rows.append(ReplayRow(j, i, t, area, True, q))
            t += q
    return sorted(rows, key=lambda r: r.fire_id)
