"""JSON documents for solved plans."""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from .chromosome import RoutePlan, encode
from .scheduling import ScheduleEvaluation


class PlanFileError(ValueError):
    pass


def plan_to_dict(plan: RoutePlan, ev: ScheduleEvaluation | None = None, **extra) -> dict:
    doc: dict = {"routes": [list(r) for r in plan.routes]}
    if all(plan.routes):
        c = encode(plan)
        doc["task_order"] = list(c.task_order)
        doc["route_lengths"] = list(c.route_lengths)
    if ev is not None:
        doc.update(
            fitness=ev.fitness,
            infeasible_count=ev.infeasible_count,
            makespan_s=ev.makespan,
            total_quench_s=ev.total_quench,
            timings=[asdict(t) for t in ev.timings.values()],
        )
    doc.update(extra)
    return doc


def dumps(plan: RoutePlan, ev: ScheduleEvaluation | None = None, **extra) -> str:
    return json.dumps(plan_to_dict(plan, ev, **extra), indent=2) + "\n"


def loads(text: str) -> RoutePlan:
    try:
        doc = json.loads(text)
        if "routes" in doc:
            return RoutePlan(tuple(tuple(int(j) for j in r) for r in doc["routes"]))
        order, lengths = doc["task_order"], doc["route_lengths"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise PlanFileError(f"malformed plan document: {exc}") from exc
    routes, start = [], 0
    for k in lengths:
        routes.append(tuple(order[start : start + k]))
        start += k
    return RoutePlan(tuple(routes))


def load(path: str | Path) -> RoutePlan:
    return loads(Path(path).read_text())
