import math

import pytest

from helpers import P, make
from uavfire.baselines import earliest_deadline_first, greedy_nearest
from uavfire.chromosome import RoutePlan, TwoPartChromosome
from uavfire.fire_model import deadline_time, quench_time
from uavfire.ga import GaConfig, evolve
from uavfire.oracle import (
    TerminalEvent,
    enumerate_chromosomes,
    exhaustive_best_plan,
    extinguish_time,
    integrate_fire,
    plan_count,
    replay_plan,
    time_to_critical,
)
from uavfire.scenario import ScenarioSpec, generate
from uavfire.scheduling import Evaluator, evaluate


def test_extinguish_reference_value():
    assert extinguish_time(100.0, P) == pytest.approx(5.3165471, abs=1e-6)


def test_time_to_critical_reference_value():
    assert time_to_critical(314.159, P) == pytest.approx(1073.24, abs=0.1)


def test_zero_area_is_already_out():
    tr = integrate_fire(0.0, P, quench_active=True)
    assert tr.terminal_event is TerminalEvent.EXTINGUISHED
    assert tr.end_time == 0.0


def test_uncontrolled_zero_area_stays_zero():
    tr = integrate_fire(0.0, P, quench_active=False, horizon=10.0)
    assert tr.terminal_event is TerminalEvent.HORIZON
    assert tr.areas[-1] == 0.0


def test_horizon_event():
    tr = integrate_fire(100.0, P, quench_active=False, horizon=10.0, record_every=100)
    assert tr.terminal_event is TerminalEvent.HORIZON
    assert tr.end_time == pytest.approx(10.0)
    assert list(tr.times) == sorted(tr.times)


def test_bad_step():
    with pytest.raises(ValueError):
        integrate_fire(1.0, P, True, step=0.0)


def test_step_halving_converges():
    a = 2500.0
    exact = quench_time(a, P)
    errs = [abs(extinguish_time(a, P, step=h) - exact) for h in (0.2, 0.1, 0.05)]
    assert errs[2] <= errs[1] <= errs[0]
    assert errs[2] < 1e-3


@pytest.mark.parametrize("area", [100.0, 314.159, 5000.0])
def test_halving_default_step(area):
    for f in (extinguish_time, time_to_critical):
        coarse, fine = f(area, P), f(area, P, step=5e-4)
        assert abs(coarse - fine) / fine < 1e-6


def test_growth_matches_deadline():
    for a in (10.0, 1000.0, 10000.0):
        assert time_to_critical(a, P, step=1e-2) == pytest.approx(deadline_time(a, P), abs=1e-4)


@pytest.mark.parametrize("n,m", [(1, 1), (3, 1), (3, 2), (4, 3), (5, 2), (4, 4)])
def test_enumeration_size(n, m):
    plans = list(enumerate_chromosomes(n, m))
    assert len(plans) == plan_count(n, m)
    assert len({c.decode().routes for c in plans}) == len(plans)
    assert all(c.is_valid() for c in plans)


def test_plan_count_small():
    assert plan_count(3, 2) == 12
    assert plan_count(1, 1) == 1


def test_enumeration_order_is_lexicographic():
    plans = [(c.task_order, c.route_lengths) for c in enumerate_chromosomes(4, 2)]
    assert plans == sorted(plans)


def test_single_plan_instance():
    sc = make([(0.0, 0.0)], [(30.0, 40.0, 100.0)])
    plan, best = exhaustive_best_plan(sc)
    assert plan.routes == ((1,),)
    assert best == evaluate(plan, sc).fitness


def test_tie_break_is_lexicographic():
    # two identical UAVs on the same spot: mirrored plans tie, the first is kept
    sc = make([(0.0, 0.0), (0.0, 0.0)], [(100.0, 0.0, 50.0), (0.0, 100.0, 50.0)])
    plan, _ = exhaustive_best_plan(sc)
    assert plan == TwoPartChromosome((1, 2), (1, 1)).decode()


def test_limits():
    with pytest.raises(ValueError):
        exhaustive_best_plan(generate(ScenarioSpec(uav_count=2, fire_count=9)))


@pytest.mark.parametrize("seed", range(3))
def test_optimum_bounds_heuristics(seed):
    sc = generate(ScenarioSpec(uav_count=2, fire_count=6, seed=seed))
    _, best = exhaustive_best_plan(sc)
    e = Evaluator(sc)
    for plan in (greedy_nearest(sc), earliest_deadline_first(sc), evolve(sc, GaConfig(rng_seed=seed)).best_chromosome.decode()):
        assert best <= e.evaluate(plan).fitness


def test_replay_agrees_with_closed_form():
    sc = generate(ScenarioSpec(uav_count=3, fire_count=8, seed=2))
    plan = greedy_nearest(sc)
    ev = evaluate(plan, sc)
    for row in replay_plan(plan, sc, step=1e-2):
        t = ev.timings[row.fire_id]
        # replay start times accumulate integrated quench durations
        assert row.start_time == pytest.approx(t.start_time, abs=1e-3)
        assert row.feasible == t.feasible
        assert row.area_at_start == pytest.approx(t.area_at_start, rel=1e-6)
        assert row.quench_duration == pytest.approx(t.quench_duration, abs=1e-4)


def test_replay_marks_lost_fire():
    sc = make([(0.0, 0.0)], [(900.0, 900.0, 12600.0)])
    (row,) = replay_plan(RoutePlan(((1,),)), sc)
    assert not row.feasible and row.quench_duration == 0.0
    assert math.isfinite(row.start_time)
