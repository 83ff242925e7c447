"""Genetic algorithm over two-part chromosomes.

Each generation: evaluate, keep the best half as parents, recombine adjacent
parents with single-point crossover plus repair, mutate offspring that are
unlucky or too infeasible, then carry the elites forward together with as
many distinct offspring as the generation had members. The population thus
grows by up to ``elite_count`` per generation.
"""

from __future__ import annotations

import bisect
import csv
import io
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .baselines import earliest_deadline_first
from .chromosome import TwoPartChromosome, encode, random_chromosome, repair
from .scenario import Scenario
from .scheduling import DEFAULT_KAPPA, Evaluator


@dataclass(frozen=True)
class GaConfig:
    population_size: int = 10
    generations: int = 50
    crossover_prob: float = 0.8
    mutation_prob: float = 0.01
    infeasibility_threshold: float = 0.2
    elite_count: int = 5
    kappa: float = DEFAULT_KAPPA
    init_max_infeasible: int = 4
    init_attempt_cap: int = 1000
    seed_greedy: bool = True
    rng_seed: int = 0
    offspring_sweeps: int = 10  # passes over the parent pairs per generation
    duplicate_retries: int = 20  # extra swaps tried to make a duplicate child unique

    def __post_init__(self):
        for name in ("crossover_prob", "mutation_prob", "infeasibility_threshold"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if self.population_size < 1:
            raise ValueError("population_size must be >= 1")
        if not 0 <= self.elite_count <= self.population_size:
            raise ValueError("elite_count must lie in [0, population_size]")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        if self.init_attempt_cap < 1 or self.offspring_sweeps < 1 or self.duplicate_retries < 0:
            raise ValueError("init_attempt_cap and offspring_sweeps must be >= 1, duplicate_retries >= 0")


@dataclass(frozen=True)
class Fitness:
    value: float
    infeasible: int
    worst_fire: int  # fire with the least deadline slack

    @property
    def feasible(self) -> bool:
        return self.infeasible == 0


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best_j: float
    avg_j: float
    population_size: int
    feasible_route_count: int


@dataclass
class GaResult:
    best_chromosome: TwoPartChromosome
    best_fitness: float
    final_population: list[tuple[TwoPartChromosome, float]]
    per_generation_stats: list[GenerationStats] = field(default_factory=list)

    def stats_csv(self) -> str:
        buf = io.StringIO()
        write_stats_csv(self.per_generation_stats, buf)
        return buf.getvalue()


STATS_COLUMNS = ("generation", "best_J", "avg_J", "population_size", "feasible_route_count")


def write_stats_csv(stats: Iterable[GenerationStats], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(STATS_COLUMNS)
    for s in stats:
        w.writerow([s.generation, repr(s.best_j), repr(s.avg_j), s.population_size, s.feasible_route_count])


class FitnessCache:
    """Memoised fitness lookups; chromosomes repeat a lot between generations."""

    def __init__(self, scenario: Scenario, kappa: float):
        self.evaluator = Evaluator(scenario, kappa)
        self.cache: dict[TwoPartChromosome, Fitness] = {}

    def __call__(self, c: TwoPartChromosome) -> Fitness:
        hit = self.cache.get(c)
        if hit is None:
            routes = []
            start = 0
            for k in c.route_lengths:
                routes.append(c.task_order[start : start + k])
                start += k
            hit = Fitness(*self.evaluator.quick(routes))
            self.cache[c] = hit
        return hit


def initialize_population(
    scenario: Scenario, config: GaConfig, rng: np.random.Generator, scorer: FitnessCache | None = None
) -> list[TwoPartChromosome]:
    """Random chromosomes screened for at most ``init_max_infeasible`` lost fires.

    Each slot takes the first acceptable draw; after ``init_attempt_cap``
    draws it settles for the least infeasible one seen. With ``seed_greedy``
    and more than four fires per UAV, the first slot holds the EDF plan.
    """
    scorer = scorer or FitnessCache(scenario, config.kappa)
    n, m = scenario.n_fires, scenario.n_uavs
    population = []
    if config.seed_greedy and n > 4 * m:
        population.append(encode(earliest_deadline_first(scenario)))
    while len(population) < config.population_size:
        best = None
        for _ in range(config.init_attempt_cap):
            c = random_chromosome(n, m, rng)
            bad = scorer(c).infeasible
            if best is None or bad < best[0]:
                best = (bad, c)
            if bad <= config.init_max_infeasible:
                break
        population.append(best[1])
    return population


def _rank(fitness: list[float]) -> list[int]:
    return sorted(range(len(fitness)), key=lambda k: (fitness[k], k))


def select_parents(population: list[TwoPartChromosome], fitness: list[float]) -> list[TwoPartChromosome]:
    """Best ceil(N/2) individuals, best first; ties keep population order."""
    keep = math.ceil(len(population) / 2)
    return [population[k] for k in _rank(fitness)[:keep]]


def crossover_at(a: TwoPartChromosome, b: TwoPartChromosome, cut: int) -> tuple[TwoPartChromosome, TwoPartChromosome]:
    """Cut both fire orders after ``cut`` genes and swap tails; children take the other parent's lengths."""
    return (
        repair(a.task_order[:cut] + b.task_order[cut:], b.route_lengths),
        repair(b.task_order[:cut] + a.task_order[cut:], a.route_lengths),
    )


def crossover(
    a: TwoPartChromosome, b: TwoPartChromosome, rng: np.random.Generator, prob: float = 0.8
) -> tuple[TwoPartChromosome, TwoPartChromosome]:
    if rng.random() >= prob or a.n < 2:
        return a, b
    return crossover_at(a, b, int(rng.integers(1, a.n)))


def mutation_due(infeasible_ratio: float, config: GaConfig, rng: np.random.Generator) -> bool:
    # draw unconditionally so the stream does not depend on the ratio
    lucky = rng.random() < config.mutation_prob
    return lucky or infeasible_ratio > config.infeasibility_threshold


def swap_mutation(c: TwoPartChromosome, target_fire: int, rng: np.random.Generator) -> TwoPartChromosome:
    """Perturb one part of the chromosome around ``target_fire``.

    Order part: the target swaps places with a random other fire. Length
    part: the route holding the target hands one slot to a random other
    route, or trades lengths with it when it has a single fire. A plain
    exchange of length genes never creates a new split of n fires over m
    routes, so the transfer is what lets the population leave its initial splits.
    """
    order = list(c.task_order)
    lengths = list(c.route_lengths)
    p = order.index(target_fire)
    if c.m == 1 or (c.n > 1 and rng.random() < 0.5):
        if c.n > 1:
            q = int(rng.integers(0, c.n - 1))
            q += q >= p
            order[p], order[q] = order[q], order[p]
    else:
        owner = bisect.bisect_right(list(itertools.accumulate(lengths)), p)
        other = int(rng.integers(0, c.m - 1))
        other += other >= owner
        if lengths[owner] > 1:
            lengths[owner] -= 1
            lengths[other] += 1
        else:
            lengths[owner], lengths[other] = lengths[other], lengths[owner]
    return TwoPartChromosome(tuple(order), tuple(lengths))


def mutate(
    c: TwoPartChromosome, evaluation: Fitness, config: GaConfig, rng: np.random.Generator
) -> TwoPartChromosome:
    """Swap-mutate around the least-slack fire when the guard fires."""
    if not mutation_due(evaluation.infeasible / c.n, config, rng):
        return c
    return swap_mutation(c, evaluation.worst_fire, rng)


def _pairs(parents: list) -> list[tuple]:
    pairs = [(parents[k], parents[k + 1]) for k in range(0, len(parents) - 1, 2)]
    if len(parents) % 2:
        pairs.append((parents[-1], parents[0]))
    return pairs


def _elites(population, fitness, count):
    elites = []
    for k in _rank(fitness):
        if len(elites) == count:
            break
        if population[k] not in elites:
            elites.append(population[k])
    return elites


def _stats(gen: int, population, scores: list[Fitness]) -> GenerationStats:
    values = [s.value for s in scores]
    return GenerationStats(
        generation=gen,
        best_j=min(values),
        avg_j=math.fsum(values) / len(values),
        population_size=len(population),
        feasible_route_count=sum(s.feasible for s in scores),
    )


def next_generation(
    population: list[TwoPartChromosome], scorer: FitnessCache, config: GaConfig, rng: np.random.Generator
) -> list[TwoPartChromosome]:
    fitness = [scorer(c).value for c in population]
    parents = select_parents(population, fitness)
    elites = _elites(population, fitness, config.elite_count)
    nxt = list(elites)
    seen = set(elites)
    pairs = _pairs(parents)
    for _ in range(config.offspring_sweeps):
        for a, b in pairs:
            for child in crossover(a, b, rng, config.crossover_prob):
                child = mutate(child, scorer(child), config, rng)
                # a child that already exists is nudged until it is new, or dropped
                for _ in range(config.duplicate_retries):
                    if child not in seen:
                        break
                    child = swap_mutation(child, int(rng.integers(1, child.n + 1)), rng)
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        if len(nxt) - len(elites) >= len(population):
            break
    return nxt


def evolve(scenario: Scenario, config: GaConfig = GaConfig()) -> GaResult:
    rng = np.random.default_rng(config.rng_seed)
    scorer = FitnessCache(scenario, config.kappa)
    population = initialize_population(scenario, config, rng, scorer)
    stats = []
    for gen in range(config.generations):
        stats.append(_stats(gen, population, [scorer(c) for c in population]))
        population = next_generation(population, scorer, config, rng)

    scores = [scorer(c) for c in population]
    stats.append(_stats(config.generations, population, scores))
    values = [s.value for s in scores]
    best = _rank(values)[0]
    return GaResult(
        best_chromosome=population[best],
        best_fitness=values[best],
        final_population=list(zip(population, values)),
        per_generation_stats=stats,
    )
