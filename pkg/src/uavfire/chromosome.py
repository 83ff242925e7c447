"""Two-part chromosome: a fire permutation plus one route length per UAV.

The first ``route_lengths[0]`` fires of ``task_order`` go to UAV 1, the next
``route_lengths[1]`` to UAV 2, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


class ChromosomeError(ValueError):
    pass


@dataclass(frozen=True)
class RoutePlan:
    routes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "routes", tuple(tuple(int(j) for j in r) for r in self.routes))

    @property
    def n_fires(self) -> int:
        return sum(len(r) for r in self.routes)

    def owner(self) -> dict[int, int]:
        """fire id -> UAV id"""
        return {j: i for i, route in enumerate(self.routes, start=1) for j in route}


@dataclass(frozen=True)
class TwoPartChromosome:
    task_order: tuple[int, ...]
    route_lengths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "task_order", tuple(int(j) for j in self.task_order))
        object.__setattr__(self, "route_lengths", tuple(int(k) for k in self.route_lengths))

    @property
    def n(self) -> int:
        return len(self.task_order)

    @property
    def m(self) -> int:
        return len(self.route_lengths)

    def is_valid(self) -> bool:
        return (
            sorted(self.task_order) == list(range(1, self.n + 1))
            and all(k >= 1 for k in self.route_lengths)
            and sum(self.route_lengths) == self.n
        )

    def validate(self) -> None:
        if sorted(self.task_order) != list(range(1, self.n + 1)):
            raise ChromosomeError(f"task_order is not a permutation of 1..{self.n}: {self.task_order}")
        if any(k < 1 for k in self.route_lengths):
            raise ChromosomeError(f"route lengths must be positive: {self.route_lengths}")
        if sum(self.route_lengths) != self.n:
            raise ChromosomeError(
                f"route lengths sum to {sum(self.route_lengths)}, expected {self.n}"
            )

    def decode(self) -> RoutePlan:
        return decode(self)


def decode(c: TwoPartChromosome) -> RoutePlan:
    c.validate()
    routes = []
    start = 0
    for k in c.route_lengths:
        routes.append(c.task_order[start : start + k])
        start += k
    return RoutePlan(tuple(routes))


def encode(plan: RoutePlan) -> TwoPartChromosome:
    if any(len(r) == 0 for r in plan.routes):
        raise ChromosomeError("every route must contain at least one fire")
    order = tuple(j for r in plan.routes for j in r)
    if sorted(order) != list(range(1, len(order) + 1)):
        raise ChromosomeError("routes do not partition the fire ids 1..n")
    return TwoPartChromosome(order, tuple(len(r) for r in plan.routes))


def random_composition(n: int, m: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform over the C(n-1, m-1) ways to write n as m ordered positive parts."""
    cuts = np.sort(rng.choice(n - 1, size=m - 1, replace=False)) + 1
    bounds = np.concatenate(([0], cuts, [n]))
    return tuple(int(d) for d in np.diff(bounds))


def random_chromosome(n: int, m: int, rng: np.random.Generator) -> TwoPartChromosome:
    if m < 1 or n < m:
        raise ChromosomeError(f"need n >= m >= 1, got n={n}, m={m}")
    order = rng.permutation(n) + 1
    return TwoPartChromosome(tuple(order.tolist()), random_composition(n, m, rng))


def repair_order(raw: Sequence[int], n: int) -> tuple[int, ...]:
    """First occurrence of each id wins; missing ids are appended in ascending order."""
    seen = set()
    kept = []
    for j in raw:
        if 1 <= j <= n and j not in seen:
            seen.add(j)
            kept.append(j)
    kept.extend(j for j in range(1, n + 1) if j not in seen)
    return tuple(kept)


def repair_lengths(raw: Sequence[int], n: int) -> tuple[int, ...]:
    """Clamp to >= 1, then trim the largest / grow the smallest until the sum is n."""
    lengths = [max(1, int(k)) for k in raw]
    if len(lengths) > n:
        raise ChromosomeError(f"cannot give {len(lengths)} UAVs one of {n} fires each")
    total = sum(lengths)
    while total > n:
        lengths[lengths.index(max(lengths))] -= 1
        total -= 1
    while total < n:
        lengths[lengths.index(min(lengths))] += 1
        total += 1
    return tuple(lengths)


def repair(task_order_raw: Sequence[int], route_lengths_raw: Sequence[int]) -> TwoPartChromosome:
    n = len(task_order_raw)
    return TwoPartChromosome(repair_order(task_order_raw, n), repair_lengths(route_lengths_raw, n))
