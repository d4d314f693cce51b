"""A small (mu + lambda) evolutionary search over LookerUp tables."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from .game import C, D, DEFAULT_GAME, Action, Game
from .match import MatchSpec, play_match
from .rng import Stream, derive_seed
from .strategies.base import Player
from .strategies.lookerup import LookerUp, LookupTable

log = logging.getLogger(__name__)

TRAIN_EVAL_TAG = 0x4556414C  # "EVAL"
TRAIN_SEARCH_TAG = 0x474130  # "GA0"

Genome = tuple[Action, ...]


@dataclass
class TrainerConfig:
    m: int
    n: int
    opponent_pool: Sequence[Player]
    population_size: int = 20
    generations: int = 50
    mutation_rate: float = 0.1
    turns: int = 200
    seed: int = 0
    noise: float = 0.0
    game: Game = field(default=DEFAULT_GAME)

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if self.population_size < 1:
            raise ValueError("population_size must be positive")
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        if not 0 < self.mutation_rate < 1:
            raise ValueError("mutation_rate must lie in (0, 1)")
        if not self.opponent_pool:
            raise ValueError("opponent_pool must not be empty")

    @property
    def genome_length(self) -> int:
        return 2**self.m * 4**self.n + max(self.m, self.n)


def evaluate_table(
    table: LookupTable,
    pool: Sequence[Player],
    turns: int,
    seed: int,
    noise: float = 0.0,
    game: Game = DEFAULT_GAME,
) -> float:
    """Mean per-turn score of ``LookerUp(table)`` over one match against each pool member.

    The match against pool member j uses a seed derived from ``(seed, j)``.
    """
    if not pool:
        raise ValueError("pool must not be empty")
    player = LookerUp(table)
    scores = []
    for j, opponent in enumerate(pool):
        spec = MatchSpec(turns=turns, noise=noise, game=game, seed=derive_seed(seed, TRAIN_EVAL_TAG, j))
        rec = play_match(spec, player, opponent)
        scores.append(rec.score_a / rec.length)
    return sum(scores) / len(scores)


def _mutate(genome: Genome, rate: float, rng: Stream) -> Genome:
    return tuple(a.flip() if rng.random() < rate else a for a in genome)


def evolve_lookup_table(config: TrainerConfig) -> tuple[LookupTable, list[float]]:
    """Elitist (mu + lambda) search; returns the best table and best fitness per generation.

    Each generation draws ``population_size`` children, each a copy of a
    uniformly chosen parent with every gene flipped independently at
    ``mutation_rate``.  Parents and children are ranked together by fitness
    (ties favour the earlier genome) and the top ``population_size`` survive.
    All fitness evaluations share one evaluation seed, so a genome's fitness
    is fixed for the whole run and the history never decreases.
    """
    rng = Stream(derive_seed(config.seed, TRAIN_SEARCH_TAG))
    eval_seed = derive_seed(config.seed, TRAIN_EVAL_TAG)
    cache: dict[Genome, float] = {}

    def fitness(genome: Genome) -> float:
        if genome not in cache:
            table = LookupTable.from_genome(config.m, config.n, genome)
            cache[genome] = evaluate_table(
                table, config.opponent_pool, config.turns, eval_seed, config.noise, config.game
            )
        return cache[genome]

    mu = config.population_size
    population: list[Genome] = [
        tuple(C if rng.random() < 0.5 else D for _ in range(config.genome_length)) for _ in range(mu)
    ]
    population.sort(key=lambda g: -fitness(g))
    history = [fitness(population[0])]
    for generation in range(config.generations):
        children = [_mutate(population[rng.randbelow(mu)], config.mutation_rate, rng) for _ in range(mu)]
        population = sorted(population + children, key=lambda g: -fitness(g))[:mu]
        history.append(fitness(population[0]))
        log.debug("generation %d best %.4f", generation + 1, history[-1])
    return LookupTable.from_genome(config.m, config.n, population[0]), history
