"""Constructive heuristics used as comparison points and as GA seeds."""

from __future__ import annotations

import math

from .chromosome import RoutePlan
from .fire_model import InfeasibleTaskError, deadline_time, grown_area, quench_time
from .scenario import Scenario
from .scheduling import DEFAULT_KAPPA, Evaluator


def _dist(a, b) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _service(scenario: Scenario, fire_id: int, start: float) -> float:
    """Time spent at a fire reached at ``start``; zero if it is already lost."""
    f = scenario.fire(fire_id)
    p = scenario.params
    if start >= deadline_time(f.initial_area, p):
        return 0.0
    try:
        return quench_time(grown_area(f.initial_area, p, start), p)
    except InfeasibleTaskError:
        return 0.0


def fill_empty_routes(routes: list[list[int]], scenario: Scenario) -> RoutePlan:
    """Give every idle UAV one fire, moving whichever single fire hurts fitness least."""
    ev = Evaluator(scenario, DEFAULT_KAPPA)
    routes = [list(r) for r in routes]
    for idle in range(len(routes)):
        if routes[idle]:
            continue
        best = None
        for donor, route in enumerate(routes):
            if len(route) < 2:
                continue
            for pos, j in enumerate(route):
                trial = [list(r) for r in routes]
                del trial[donor][pos]
                trial[idle] = [j]
                key = (ev.quick(trial)[0], j)
                if best is None or key < best[0]:
                    best = (key, trial)
        routes = best[1]
    return RoutePlan(tuple(tuple(r) for r in routes))


def greedy_nearest(scenario: Scenario) -> RoutePlan:
    """The UAV that frees up first takes the closest unassigned fire."""
    speed = scenario.params.uav_speed
    pos = [u.position for u in scenario.uavs]
    avail = [0.0] * scenario.n_uavs
    routes: list[list[int]] = [[] for _ in scenario.uavs]
    todo = set(range(1, scenario.n_fires + 1))
    while todo:
        i = min(range(scenario.n_uavs), key=lambda k: (avail[k], k))
        j = min(todo, key=lambda f: (_dist(pos[i], scenario.fire(f).position), f))
        start = avail[i] + _dist(pos[i], scenario.fire(j).position) / speed
        avail[i] = start + _service(scenario, j, start)
        pos[i] = scenario.fire(j).position
        routes[i].append(j)
        todo.remove(j)
    return fill_empty_routes(routes, scenario)


def earliest_deadline_first(scenario: Scenario) -> RoutePlan:
    """Fires in order of static deadline, each to the UAV able to start it soonest."""
    p = scenario.params
    speed = p.uav_speed
    order = sorted(
        range(1, scenario.n_fires + 1),
        key=lambda j: (deadline_time(scenario.fire(j).initial_area, p), j),
    )
    pos = [u.position for u in scenario.uavs]
    avail = [0.0] * scenario.n_uavs
    routes: list[list[int]] = [[] for _ in scenario.uavs]
    for j in order:
        target = scenario.fire(j).position
        starts = [avail[i] + _dist(pos[i], target) / speed for i in range(scenario.n_uavs)]
        i = min(range(scenario.n_uavs), key=lambda k: (starts[k], k))
        avail[i] = starts[i] + _service(scenario, j, starts[i])
        pos[i] = target
        routes[i].append(j)
    return fill_empty_routes(routes, scenario)


METHODS = {"greedy": greedy_nearest, "edf": earliest_deadline_first}
