"""Population dynamics on top of the match engine: Moran processes and replicator dynamics."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateFitness, NonPositiveFitness
from .game import DEFAULT_GAME, Game
from .match import MatchSpec, play_match
from .rng import Stream, derive_seed
from .strategies.base import Player

MORAN_MATCH_TAG = 0x4D4F52414E  # "MORAN"
MORAN_SELECT_TAG = 0x53454C  # "SEL"


@dataclass
class MoranState:
    """Initial Moran population; individuals are identified by ``player.name``."""

    population: Sequence[Player]
    generation: int = 0
    seed: int = 0
    turns_per_interaction: int = 100
    noise: float = 0.0
    game: Game = field(default=DEFAULT_GAME)

    def __post_init__(self) -> None:
        if len(self.population) < 2:
            raise ValueError("a Moran process needs at least two individuals")


@dataclass
class MoranResult:
    winner: str
    generations: int
    trajectory: list[tuple[int, ...]]
    labels: tuple[str, ...]

    def counts(self, generation: int) -> dict[str, int]:
        return dict(zip(self.labels, self.trajectory[generation]))


def _counts(population: list[int], k: int) -> tuple[int, ...]:
    counts = [0] * k
    for t in population:
        counts[t] += 1
    return tuple(counts)


def run_moran(initial: MoranState, max_generations: int | None = None) -> MoranResult:
    """Birth-death Moran process run until one identity fills the population.

    Each generation every pair of distinct individuals plays one match with a
    seed derived from ``(seed, generation, i, j)``; an individual's fitness
    is its mean per-turn score.  A parent is chosen with probability
    proportional to fitness (uniformly if all fitnesses are zero) and its
    offspring replaces a uniformly chosen individual, possibly the parent.

    Matches between two deterministic types without noise always produce the
    same record, so those are played once per run and reused.
    """
    labels: list[str] = []
    founders: list[Player] = []
    population: list[int] = []
    for player in initial.population:
        if player.name not in labels:
            labels.append(player.name)
            founders.append(player)
        population.append(labels.index(player.name))
    k = len(labels)
    size = len(population)
    deterministic = [not p.classifier.stochastic for p in founders]
    cache: dict[tuple[int, int], tuple[float, float]] = {}

    generation = initial.generation
    trajectory = [_counts(population, k)]
    while len(set(population)) > 1:
        if max_generations is not None and generation - initial.generation >= max_generations:
            break
        totals = [0.0] * size
        for i in range(size):
            for j in range(i + 1, size):
                ti, tj = population[i], population[j]
                cacheable = initial.noise == 0 and deterministic[ti] and deterministic[tj]
                if cacheable and (ti, tj) in cache:
                    si, sj = cache[ti, tj]
                else:
                    spec = MatchSpec(
                        turns=initial.turns_per_interaction,
                        noise=initial.noise,
                        game=initial.game,
                        seed=derive_seed(initial.seed, MORAN_MATCH_TAG, generation, i, j),
                    )
                    rec = play_match(spec, founders[ti], founders[tj])
                    si, sj = rec.score_a / rec.length, rec.score_b / rec.length
                    if cacheable:
                        cache[ti, tj] = (si, sj)
                        cache[tj, ti] = (sj, si)
                totals[i] += si
                totals[j] += sj
        fitness = [t / (size - 1) for t in totals]
        if any(f < 0 for f in fitness):
            raise NonPositiveFitness(f"negative fitness in generation {generation}: {fitness}")

        rng = Stream(derive_seed(initial.seed, MORAN_SELECT_TAG, generation))
        if math.fsum(fitness) > 0:
            parent = rng.weighted_index(fitness)
        else:
            parent = rng.randbelow(size)
        dead = rng.randbelow(size)
        population[dead] = population[parent]
        generation += 1
        trajectory.append(_counts(population, k))

    counts = trajectory[-1]
    winner = labels[max(range(k), key=lambda t: counts[t])] if len(set(population)) == 1 else ""
    return MoranResult(winner, generation - initial.generation, trajectory, tuple(labels))


@dataclass
class EcoState:
    proportions: np.ndarray
    payoff_matrix: np.ndarray

    def __post_init__(self) -> None:
        self.proportions = np.asarray(self.proportions, dtype=float)
        self.payoff_matrix = np.asarray(self.payoff_matrix, dtype=float)
        n = self.proportions.shape[0]
        if self.payoff_matrix.shape != (n, n):
            raise ValueError("payoff matrix must be square and match the proportions")
        if not np.all(np.isfinite(self.payoff_matrix)):
            raise ValueError("payoff matrix has missing cells; play the tournament with self-play")
        if np.any(self.proportions < 0) or not math.isclose(self.proportions.sum(), 1.0, abs_tol=1e-12):
            raise ValueError("proportions must be non-negative and sum to 1")

    @classmethod
    def from_result_set(cls, rs, proportions=None) -> EcoState:
        n = rs.n_players
        if proportions is None:
            proportions = np.full(n, 1.0 / n)
        return cls(np.asarray(proportions, dtype=float), rs.payoff_matrix)


def replicator_step(x: np.ndarray, payoff: np.ndarray, renormalize: bool = True) -> np.ndarray:
    """One discrete replicator update ``x_i <- x_i * (M x)_i / (x^T M x)``."""
    fitness = payoff @ x
    mean_fitness = float(x @ fitness)
    if mean_fitness == 0:
        raise DegenerateFitness("mean population fitness is zero")
    nxt = x * fitness / mean_fitness
    if renormalize:
        nxt = nxt / nxt.sum()
    return nxt


def run_eco(initial: EcoState, generations: int) -> list[np.ndarray]:
    """Trajectory of proportion vectors, starting with the initial one."""
    if generations < 0:
        raise ValueError("generations must be non-negative")
    x = initial.proportions.copy()
    trajectory = [x]
    for _ in range(generations):
        x = replicator_step(x, initial.payoff_matrix)
        trajectory.append(x)
    return trajectory
