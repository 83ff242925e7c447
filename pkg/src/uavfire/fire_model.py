"""Analytic dynamics of a circular fire front under growth and quenching.

The fire area obeys ``dA/dt = phi_s * P(A) - phi_q`` with perimeter
``P(A) = 2 sqrt(pi) sqrt(A)``. Substituting ``u = sqrt(A)`` makes the growth
phase linear in time and the quench phase separable, which is where every
closed form below comes from. All times are seconds, areas square meters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# perimeter coefficient of a circle written in terms of its area
K = 2.0 * math.sqrt(math.pi)
SQRT_PI = math.sqrt(math.pi)


class InfeasibleTaskError(ValueError):
    """Raised when a fire is already at or beyond single-UAV capacity."""


@dataclass(frozen=True)
class FireParams:
    spread_rate: float = 0.05  # radial, m/s
    quench_rate: float = 20.0  # area, m^2/s
    uav_speed: float = 20.0  # m/s

    def __post_init__(self):
        for name in ("spread_rate", "quench_rate", "uav_speed"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")


@dataclass(frozen=True)
class FireSpot:
    id: int
    position: tuple[float, float]
    initial_area: float

    def __post_init__(self):
        if not self.initial_area > 0:
            raise ValueError(f"fire {self.id}: initial_area must be > 0")


def perimeter(area: float) -> float:
    if area < 0:
        raise ValueError(f"area must be non-negative, got {area}")
    return K * math.sqrt(area)


def grown_area(initial_area: float, params: FireParams, elapsed: float) -> float:
    """Area of an unattended fire after ``elapsed`` seconds."""
    if initial_area < 0:
        raise ValueError(f"initial_area must be non-negative, got {initial_area}")
    if elapsed < 0:
        raise ValueError(f"elapsed must be non-negative, got {elapsed}")
    return (math.sqrt(initial_area) + SQRT_PI * params.spread_rate * elapsed) ** 2


def critical_area(params: FireParams) -> float:
    """Area at which perimeter growth exactly cancels one UAV's quench rate."""
    return (params.quench_rate / (K * params.spread_rate)) ** 2


def deadline_time(initial_area: float, params: FireParams) -> float:
    """Time until an unattended fire reaches the critical area.

    Negative when the fire is already past critical; callers compare start
    times against it directly, so no error is raised.
    """
    if initial_area < 0:
        raise ValueError(f"initial_area must be non-negative, got {initial_area}")
    return (math.sqrt(critical_area(params)) - math.sqrt(initial_area)) / (
        params.spread_rate * SQRT_PI
    )


def quench_time(area_at_start: float, params: FireParams) -> float:
    """Time for one UAV to drive a fire of ``area_at_start`` down to zero.

    Raises InfeasibleTaskError for areas at or above the critical area,
    where the fire never shrinks.
    """
    if area_at_start < 0:
        raise ValueError(f"area must be non-negative, got {area_at_start}")
    if area_at_start == 0:
        return 0.0
    growth = K * params.spread_rate
    q = params.quench_rate
    u = math.sqrt(area_at_start)
    margin = q - growth * u
    if margin <= 0:
        raise InfeasibleTaskError(
            f"area {area_at_start:.6g} is not below critical area {critical_area(params):.6g}"
        )
    x = growth * u / q
    # ln(1/(1-x)) - x loses everything to cancellation for small x; use the series there
    if x < 1e-3:
        series = x * x / 2 + x**3 / 3 + x**4 / 4 + x**5 / 5
        return 2 * q / growth**2 * series
    return 2 * q / growth**2 * (-math.log1p(-x) - x)
