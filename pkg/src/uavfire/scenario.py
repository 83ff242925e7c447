"""Mission scenarios: random generation, validation and JSON round-tripping."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .fire_model import FireParams, FireSpot, critical_area


class ScenarioError(ValueError):
    """Invalid scenario, scenario spec, or scenario document."""


@dataclass(frozen=True)
class Uav:
    id: int
    position: tuple[float, float]


@dataclass(frozen=True)
class Scenario:
    width: float
    height: float
    uavs: tuple[Uav, ...]
    fires: tuple[FireSpot, ...]
    params: FireParams = field(default_factory=FireParams)

    def __post_init__(self):
        object.__setattr__(self, "uavs", tuple(self.uavs))
        object.__setattr__(self, "fires", tuple(self.fires))
        validate(self)

    @property
    def n_fires(self) -> int:
        return len(self.fires)

    @property
    def n_uavs(self) -> int:
        return len(self.uavs)

    def fire(self, fire_id: int) -> FireSpot:
        return self.fires[fire_id - 1]

    def uav(self, uav_id: int) -> Uav:
        return self.uavs[uav_id - 1]


def _inside(pos, width, height) -> bool:
    return 0.0 <= pos[0] <= width and 0.0 <= pos[1] <= height


def validate(s: Scenario) -> None:
    if not (s.width > 0 and s.height > 0):
        raise ScenarioError("bounds must have positive width and height")
    if s.n_uavs < 1:
        raise ScenarioError("scenario needs at least one UAV")
    if s.n_fires < s.n_uavs:
        raise ScenarioError(f"need at least as many fires as UAVs (n={s.n_fires} < m={s.n_uavs})")
    if [u.id for u in s.uavs] != list(range(1, s.n_uavs + 1)):
        raise ScenarioError("UAV ids must be 1..m in order")
    if [f.id for f in s.fires] != list(range(1, s.n_fires + 1)):
        raise ScenarioError("fire ids must be 1..n in order")
    a_crit = critical_area(s.params)
    for u in s.uavs:
        if not _inside(u.position, s.width, s.height):
            raise ScenarioError(f"UAV {u.id} lies outside the mission area")
    for f in s.fires:
        if not _inside(f.position, s.width, s.height):
            raise ScenarioError(f"fire {f.id} lies outside the mission area")
        if not f.initial_area < a_crit:
            raise ScenarioError(
                f"fire {f.id} starts at {f.initial_area:.6g} m^2, not below critical area {a_crit:.6g}"
            )


@dataclass(frozen=True)
class ScenarioSpec:
    """Recipe for a random scenario. ``uav_placement`` is "scatter" or "base"."""

    width: float = 1000.0
    height: float = 1000.0
    uav_count: int = 5
    fire_count: int = 15
    radius_min: float = 5.0
    radius_max: float = 15.0
    params: FireParams = field(default_factory=FireParams)
    seed: int = 0
    uav_placement: str = "scatter"
    base_position: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.uav_count < 1 or self.fire_count < self.uav_count:
            raise ScenarioError("need fire_count >= uav_count >= 1")
        if self.radius_min < 0 or self.radius_max < self.radius_min:
            raise ScenarioError("need 0 <= radius_min <= radius_max")
        if self.uav_placement not in ("scatter", "base"):
            raise ScenarioError(f"unknown uav_placement {self.uav_placement!r}")
        if math.pi * self.radius_max**2 >= critical_area(self.params):
            raise ScenarioError(
                f"radius_max {self.radius_max} gives area {math.pi * self.radius_max**2:.6g} m^2, "
                f"not below critical area {critical_area(self.params):.6g}"
            )


def _streams(seed) -> tuple[np.random.Generator, ...]:
    # independent substreams: fire positions, fire radii, UAV positions
    ss = np.random.SeedSequence(seed)
    return tuple(np.random.default_rng(child) for child in ss.spawn(3))


def generate(spec: ScenarioSpec, resample_seed: int | Sequence[int] | None = None) -> Scenario:
    """Draw a scenario from ``spec``.

    Fire positions always come from ``spec.seed``. If ``resample_seed`` is
    given, fire radii and UAV positions are drawn from it instead, which keeps
    the fire layout fixed across Monte-Carlo iterations.
    """
    pos_rng, radius_rng, uav_rng = _streams(spec.seed)
    if resample_seed is not None:
        _, radius_rng, uav_rng = _streams(resample_seed)
    n, m = spec.fire_count, spec.uav_count
    fire_xy = pos_rng.uniform((0.0, 0.0), (spec.width, spec.height), size=(n, 2))
    radii = radius_rng.uniform(spec.radius_min, spec.radius_max, size=n)
    if spec.uav_placement == "scatter":
        uav_xy = uav_rng.uniform((0.0, 0.0), (spec.width, spec.height), size=(m, 2))
    else:
        uav_xy = np.tile(np.asarray(spec.base_position, dtype=float), (m, 1))
    fires = tuple(
        FireSpot(j + 1, (float(x), float(y)), float(math.pi * r * r))
        for j, ((x, y), r) in enumerate(zip(fire_xy, radii))
    )
    uavs = tuple(Uav(i + 1, (float(x), float(y))) for i, (x, y) in enumerate(uav_xy))
    return Scenario(spec.width, spec.height, uavs, fires, spec.params)


def to_dict(s: Scenario) -> dict:
    return {
        "bounds": {"w": s.width, "h": s.height},
        "params": {
            "spread_rate": s.params.spread_rate,
            "quench_rate": s.params.quench_rate,
            "uav_speed": s.params.uav_speed,
        },
        "uavs": [{"id": u.id, "x": u.position[0], "y": u.position[1]} for u in s.uavs],
        "fires": [
            {"id": f.id, "x": f.position[0], "y": f.position[1], "initial_area": f.initial_area}
            for f in s.fires
        ],
    }


def from_dict(doc: dict) -> Scenario:
    try:
        bounds = doc["bounds"]
        p = doc["params"]
        params = FireParams(float(p["spread_rate"]), float(p["quench_rate"]), float(p["uav_speed"]))
        uavs = [Uav(int(u["id"]), (float(u["x"]), float(u["y"]))) for u in doc["uavs"]]
        fires = [
            FireSpot(int(f["id"]), (float(f["x"]), float(f["y"])), float(f["initial_area"]))
            for f in doc["fires"]
        ]
        width, height = float(bounds["w"]), float(bounds["h"])
    except (KeyError, TypeError) as exc:
        raise ScenarioError(f"malformed scenario document: missing or bad field {exc}") from exc
    except ValueError as exc:
        raise ScenarioError(str(exc)) from exc
    return Scenario(width, height, tuple(uavs), tuple(fires), params)


def dumps(s: Scenario) -> str:
    return json.dumps(to_dict(s), indent=2) + "\n"


def loads(text: str) -> Scenario:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ScenarioError("scenario document must be a JSON object")
    return from_dict(doc)


def save(s: Scenario, path: str | Path) -> None:
    Path(path).write_text(dumps(s))


def load(path: str | Path) -> Scenario:
    return loads(Path(path).read_text())
