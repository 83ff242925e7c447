import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uavfire.fire_model import (
    FireParams,
    InfeasibleTaskError,
    critical_area,
    deadline_time,
    grown_area,
    perimeter,
    quench_time,
)
from uavfire.oracle import extinguish_time, time_to_critical

PARAM_SETS = [
    FireParams(0.05, 20.0, 20.0),
    FireParams(0.10, 20.0, 20.0),
    FireParams(0.02, 5.0, 10.0),
]


def oracle_step(area, params):
    # resolve at least ~1000 steps over the no-growth lower bound A / phi_q
    return min(1e-2, area / params.quench_rate / 1e3)


def test_perimeter():
    assert perimeter(0) == 0
    assert perimeter(1 / (4 * math.pi)) == pytest.approx(1.0, rel=1e-15)
    assert perimeter(math.pi * 100) == pytest.approx(2 * math.pi * 10, rel=1e-12)
    assert perimeter(314.1593) == pytest.approx(62.8319, abs=1e-4)
    with pytest.raises(ValueError):
        perimeter(-1.0)


def test_grown_area(params):
    assert grown_area(100, params, 0) == 100
    # frozen from the RK4 oracle with quench off
    assert grown_area(100, params, 10) == pytest.approx(118.50993667, rel=1e-6)
    assert grown_area(0, params, 100) == pytest.approx(math.pi * 25, rel=1e-12)
    with pytest.raises(ValueError):
        grown_area(100, params, -1)


def test_grown_area_matches_rk4(params):
    from uavfire.oracle import integrate_fire

    trace = integrate_fire(100, params, quench_active=False, step=1e-3, horizon=10.0, record_every=1)
    assert trace.areas[-1] == pytest.approx(grown_area(100, params, 10), rel=1e-6)


def test_critical_area(params):
    assert critical_area(FireParams(1.0, 2 * math.sqrt(math.pi), 1.0)) == pytest.approx(1.0, rel=1e-15)
    assert critical_area(params) == pytest.approx(12732.395, abs=1e-3)
    assert critical_area(FireParams(0.10, 20.0, 20.0)) == pytest.approx(3183.099, abs=1e-3)
    a_c = critical_area(params)
    # growth exactly balances quenching at the critical area
    assert params.spread_rate * perimeter(a_c) == pytest.approx(params.quench_rate, rel=1e-12)


def test_deadline_time(params):
    a_c = critical_area(params)
    assert deadline_time(a_c, params) == pytest.approx(0.0, abs=1e-9)
    assert deadline_time(314.1593, params) == pytest.approx(1073.24, abs=5e-3)
    assert deadline_time(314.1593, params) == pytest.approx(time_to_critical(314.1593, params), rel=1e-4)
    assert deadline_time(4 * a_c, params) == pytest.approx(-1273.24, abs=5e-3)


def test_quench_time_values(params):
    assert quench_time(0, params) == 0
    # RK4 extinguish time, step 1e-3: 5.3165471
    assert quench_time(100, params) == pytest.approx(5.3165471, rel=1e-6)
    assert quench_time(100, params) > 100 / params.quench_rate


def test_quench_time_blows_up_near_critical(params):
    a_c = critical_area(params)
    ratios = [quench_time(f * a_c, params) / (f * a_c / params.quench_rate) for f in (0.9, 0.99, 0.9999)]
    assert ratios == sorted(ratios)
    # RK4 with step 1e-2 gives 5475.97 s at 0.99 A_c
    assert quench_time(0.99 * a_c, params) == pytest.approx(5475.97, rel=1e-4)
    assert ratios[-1] > 10


def test_quench_time_infeasible(params):
    with pytest.raises(InfeasibleTaskError):
        quench_time(critical_area(params), params)
    with pytest.raises(InfeasibleTaskError):
        quench_time(2 * critical_area(params), params)


@pytest.mark.parametrize("p", PARAM_SETS)
def test_quench_time_matches_ode(p):
    a_c = critical_area(p)
    for area in np.geomspace(1e-3 * a_c, 0.95 * a_c, 8):
        assert quench_time(area, p) == pytest.approx(
            extinguish_time(area, p, step=oracle_step(area, p)), rel=1e-4
        )


def test_small_area_series_branch(params):
    # both sides of the series cut-over agree with the ODE
    for area in (1e-4, 1e-2, 1.0):
        assert quench_time(area, params) == pytest.approx(
            extinguish_time(area, params, step=oracle_step(area, params)), rel=1e-4
        )


@settings(max_examples=200, deadline=None)
@given(frac=st.floats(1e-6, 0.999), p=st.sampled_from(PARAM_SETS))
def test_quench_exceeds_no_growth_bound(frac, p):
    area = frac * critical_area(p)
    assert quench_time(area, p) > area / p.quench_rate


@settings(max_examples=200, deadline=None)
@given(a=st.floats(1e-6, 0.998), b=st.floats(1e-6, 0.998), p=st.sampled_from(PARAM_SETS))
def test_quench_time_monotone(a, b, p):
    a_c = critical_area(p)
    lo, hi = sorted((a, b))
    if hi - lo > 1e-9:
        assert quench_time(lo * a_c, p) < quench_time(hi * a_c, p)


@settings(max_examples=200, deadline=None)
@given(frac=st.floats(0.0, 0.999), p=st.sampled_from(PARAM_SETS))
def test_deadline_reaches_critical(frac, p):
    a0 = frac * critical_area(p)
    assert grown_area(a0, p, deadline_time(a0, p)) == pytest.approx(critical_area(p), rel=1e-6)


@settings(max_examples=200, deadline=None)
@given(
    a=st.floats(0.0, 1e5),
    t1=st.floats(0.0, 1e4),
    t2=st.floats(0.0, 1e4),
    p=st.sampled_from(PARAM_SETS),
)
def test_growth_semigroup(a, t1, t2, p):
    assert grown_area(grown_area(a, p, t1), p, t2) == pytest.approx(grown_area(a, p, t1 + t2), rel=1e-9)


def test_params_validation():
    with pytest.raises(ValueError):
        FireParams(spread_rate=0.0)
    with pytest.raises(ValueError):
        FireParams(quench_rate=-1.0)
    with pytest.raises(ValueError):
        FireParams(uav_speed=float("nan"))
