"""Hand-built scenarios shared by several test modules."""

from uavfire.fire_model import FireParams, FireSpot, critical_area
from uavfire.scenario import Scenario, ScenarioSpec, Uav, generate

P = FireParams(0.05, 20.0, 20.0)


def make(uavs, fires, width=1000.0, height=1000.0, params=P):
    """uavs: [(x, y)], fires: [(x, y, area)]"""
    return Scenario(
        width,
        height,
        tuple(Uav(i + 1, u) for i, u in enumerate(uavs)),
        tuple(FireSpot(j + 1, (x, y), a) for j, (x, y, a) in enumerate(fires)),
        params,
    )


def urgent_scenario(seed: int, n: int = 6, m: int = 2):
    """Large fires close to critical size, so some are lost whatever the plan."""
    return generate(ScenarioSpec(uav_count=m, fire_count=n, radius_min=55.0, radius_max=62.5, seed=seed))


def hopeless_scenario():
    """One fire that no UAV can reach before its deadline (~37 s vs >= 45 s of flight)."""
    return make([(0.0, 0.0), (100.0, 0.0)], [(1000.0, 1000.0, 12000.0), (50.0, 50.0, 100.0)])


A_CRIT = critical_area(P)
