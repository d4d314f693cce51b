"""Round-robin tournaments: edge generation, seed derivation and parallel play.

Every match seed is ``derive_match_seed(master_seed, a, b, repetition)``, so
the archive depends only on the spec.  Workers may finish in any order; the
archive is always re-sorted by ``(repetition, a, b)``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import StrategyFault
from .game import DEFAULT_GAME, Game
from .match import MatchRecord, MatchSpec, play_match
from .rng import Stream, derive_seed
from .strategies.base import Player

log = logging.getLogger(__name__)

# Domain tags keep seeds for different purposes apart.
MATCH_TAG = 0x4D41544348  # "MATCH"
EDGE_TAG = 0x45444745  # "EDGE"


@dataclass
class TournamentSpec:
    players: Sequence[Player]
    turns: int | None = 200
    repetitions: int = 10
    noise: float = 0.0
    prob_end: float = 0.0
    edge_prob: float = 1.0
    master_seed: int = 0
    with_self_play: bool = True
    game: Game = field(default=DEFAULT_GAME)

    def __post_init__(self) -> None:
        if not self.players:
            raise ValueError("a tournament needs at least one player")
        if self.repetitions < 1:
            raise ValueError("repetitions must be at least 1")
        if not 0 < self.edge_prob <= 1:
            raise ValueError("edge_prob must lie in (0, 1]")
        # Validates turns / noise / prob_end together.
        self.match_spec(0)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.players)

    def match_spec(self, seed: int) -> MatchSpec:
        return MatchSpec(self.turns, self.prob_end, self.noise, self.game, seed)


class ArchiveEntry(NamedTuple):
    repetition: int
    index_a: int
    index_b: int
    record: MatchRecord


@dataclass
class InteractionArchive:
    """Every match played, in canonical ``(repetition, a, b)`` order."""

    names: tuple[str, ...]
    entries: list[ArchiveEntry]
    master_seed: int = 0

    def __post_init__(self) -> None:
        self.names = tuple(self.names)
        self.entries = sorted(self.entries, key=lambda e: (e.repetition, e.index_a, e.index_b))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def derive_match_seed(master_seed: int, a: int, b: int, repetition: int) -> int:
    """SplitMix64 fold of ``(MATCH_TAG, a, b, repetition)`` into the master seed."""
    return derive_seed(master_seed, MATCH_TAG, a, b, repetition)


def edge_stream(master_seed: int, repetition: int) -> Stream:
    return Stream(derive_seed(master_seed, EDGE_TAG, repetition))


def generate_edges(
    spec: TournamentSpec, repetition: int, rng: Stream | None = None
) -> list[tuple[int, int]]:
    """Pairs ``(a, b)`` with ``a <= b`` that meet in this repetition.

    With ``edge_prob < 1`` each candidate pair, in lexicographic order,
    consumes one draw from ``rng`` (by default the repetition's edge stream).
    """
    if not 0 <= repetition < spec.repetitions:
        raise ValueError(f"repetition {repetition} out of range")
    n = len(spec.players)
    offset = 0 if spec.with_self_play else 1
    pairs = [(a, b) for a in range(n) for b in range(a + offset, n)]
    if spec.edge_prob >= 1:
        return pairs
    if rng is None:
        rng = edge_stream(spec.master_seed, repetition)
    return [pair for pair in pairs if rng.random() < spec.edge_prob]


def match_tasks(spec: TournamentSpec) -> list[tuple[int, int, int, int]]:
    """``(repetition, a, b, seed)`` for every match, in canonical order."""
    tasks = []
    for rep in range(spec.repetitions):
        for a, b in generate_edges(spec, rep):
            tasks.append((rep, a, b, derive_match_seed(spec.master_seed, a, b, rep)))
    return tasks


def _play_task(spec: TournamentSpec, task: tuple[int, int, int, int]) -> ArchiveEntry:
    rep, a, b, seed = task
    try:
        record = play_match(spec.match_spec(seed), spec.players[a], spec.players[b])
    except StrategyFault as exc:
        raise StrategyFault(
            f"repetition {rep}, players {a} vs {b}: {exc}", context=(rep, a, b)
        ) from exc
    return ArchiveEntry(rep, a, b, record)


_worker_spec: TournamentSpec | None = None


def _init_worker(spec: TournamentSpec) -> None:
    global _worker_spec
    _worker_spec = spec


def _worker_play(task):
    return _play_task(_worker_spec, task)


def run_tournament(spec: TournamentSpec, jobs: int = 1) -> InteractionArchive:
    """Play the whole tournament; the result is identical for every ``jobs``."""
    if jobs < 1:
        raise ValueError("jobs must be positive")
    tasks = match_tasks(spec)
    log.debug("playing %d matches with %d job(s)", len(tasks), jobs)
    if jobs == 1 or len(tasks) <= 1:
        entries = [_play_task(spec, t) for t in tasks]
    else:
        chunksize = max(1, len(tasks) // (jobs * 4))
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_worker, initargs=(spec,)
        ) as pool:
            entries = list(pool.map(_worker_play, tasks, chunksize=chunksize))
    return InteractionArchive(spec.names, entries, spec.master_seed)
