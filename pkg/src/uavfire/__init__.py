"""Routing and scheduling a UAV fleet to put out growing fires one at a time."""

from .chromosome import RoutePlan, TwoPartChromosome, decode, encode, repair
from .fire_model import FireParams, FireSpot, critical_area, deadline_time, grown_area, perimeter, quench_time
from .ga import GaConfig, GaResult, evolve
from .scenario import Scenario, ScenarioSpec, Uav, generate
from .scheduling import ScheduleEvaluation, TaskTiming, evaluate, fire_expansion_ratios, mission_success

__all__ = [
    "FireParams", "FireSpot", "GaConfig", "GaResult", "RoutePlan", "Scenario", "ScenarioSpec",
    "ScheduleEvaluation", "TaskTiming", "TwoPartChromosome", "Uav", "critical_area", "deadline_time",
    "decode", "encode", "evaluate", "evolve", "fire_expansion_ratios", "generate", "grown_area",
    "mission_success", "perimeter", "quench_time", "repair",
]
