"""Turn an interaction archive into rankings, wins, payoff and cooperation summaries."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import EmptyArchive
from .game import C
from .tournament import InteractionArchive, TournamentSpec


@dataclass
class ResultSet:
    """Aggregated tournament results.

    Arrays are indexed by roster position.  ``normalized_scores[i, r]`` is
    player i's mean per-turn score over its non-self matches in repetition r
    (NaN if it had none).  Cells of ``payoff_matrix`` and
    ``cooperation_rates`` are NaN for pairs that never met.
    """

    names: tuple[str, ...]
    normalized_scores: np.ndarray
    ranking: list[int]
    wins: np.ndarray
    payoff_matrix: np.ndarray
    cooperation_rates: np.ndarray
    total_scores: np.ndarray
    cooperations: np.ndarray
    plays: np.ndarray
    good_partner_matches: np.ndarray
    partner_matches: np.ndarray

    @property
    def n_players(self) -> int:
        return len(self.names)

    @property
    def repetitions(self) -> int:
        return self.normalized_scores.shape[1]

    def median_scores(self) -> np.ndarray:
        out = np.full(self.n_players, np.nan)
        for i, row in enumerate(self.normalized_scores):
            valid = row[~np.isnan(row)]
            if valid.size:
                out[i] = np.median(valid)
        return out

    def total_wins(self) -> np.ndarray:
        return self.wins.sum(axis=1)


def _mean(values: list[float]) -> float:
    return math.fsum(values) / len(values) if values else math.nan


def _ranking(values: np.ndarray) -> list[int]:
    """Indices by descending value; NaN last; ties by ascending index."""
    return sorted(
        range(len(values)),
        key=lambda i: (math.isnan(values[i]), -values[i] if not math.isnan(values[i]) else 0, i),
    )


def build_result_set(archive: InteractionArchive, spec: TournamentSpec | None = None) -> ResultSet:
    if not archive.entries:
        raise EmptyArchive("cannot build results from an empty archive")
    n = len(archive.names)
    reps = spec.repetitions if spec is not None else 1 + max(e.repetition for e in archive)

    per_turn: dict[tuple[int, int], list[float]] = defaultdict(list)  # (player, rep)
    pair_per_turn: dict[tuple[int, int], list[float]] = defaultdict(list)  # (row, col)
    raw: dict[int, list[float]] = defaultdict(list)
    pair_coop = np.zeros((n, n), dtype=np.int64)
    pair_plays = np.zeros((n, n), dtype=np.int64)
    wins = np.zeros((n, reps), dtype=np.int64)
    cooperations = np.zeros(n, dtype=np.int64)
    plays = np.zeros(n, dtype=np.int64)
    good = np.zeros(n, dtype=np.int64)
    partner = np.zeros(n, dtype=np.int64)

    for rep, a, b, rec in archive:
        length = rec.length
        coop_a = sum(1 for x in rec.actions_a if x is C)
        coop_b = sum(1 for x in rec.actions_b if x is C)
        raw[a].append(rec.score_a)
        raw[b].append(rec.score_b)
        cooperations[a] += coop_a
        cooperations[b] += coop_b
        plays[a] += length
        plays[b] += length
        pair_per_turn[a, b].append(rec.score_a / length)
        pair_coop[a, b] += coop_a
        pair_plays[a, b] += length
        if a == b:
            pair_per_turn[a, a].append(rec.score_b / length)
            pair_coop[a, a] += coop_b
            pair_plays[a, a] += length
            continue
        pair_per_turn[b, a].append(rec.score_b / length)
        pair_coop[b, a] += coop_b
        pair_plays[b, a] += length
        per_turn[a, rep].append(rec.score_a / length)
        per_turn[b, rep].append(rec.score_b / length)
        if rec.score_a > rec.score_b:
            wins[a, rep] += 1
        elif rec.score_b > rec.score_a:
            wins[b, rep] += 1
        partner[a] += 1
        partner[b] += 1
        good[a] += coop_a >= coop_b
        good[b] += coop_b >= coop_a

    normalized = np.array([[_mean(per_turn.get((i, r), [])) for r in range(reps)] for i in range(n)])
    payoff = np.array([[_mean(pair_per_turn.get((i, j), [])) for j in range(n)] for i in range(n)])
    with np.errstate(invalid="ignore", divide="ignore"):
        coop_rates = np.where(pair_plays > 0, pair_coop / np.maximum(pair_plays, 1), np.nan)
    totals = np.array([math.fsum(raw.get(i, [])) for i in range(n)])

    rs = ResultSet(
        names=tuple(archive.names),
        normalized_scores=normalized,
        ranking=[],
        wins=wins,
        payoff_matrix=payoff,
        cooperation_rates=coop_rates,
        total_scores=totals,
        cooperations=cooperations,
        plays=plays,
        good_partner_matches=good,
        partner_matches=partner,
    )
    rs.ranking = _ranking(rs.median_scores())
    return rs


def rank_strategies(rs: ResultSet) -> list[tuple[str, float]]:
    """``(name, median normalized score)`` best first; ties keep roster order."""
    medians = rs.median_scores()
    return [(rs.names[i], float(medians[i])) for i in _ranking(medians)]


def rank_by_wins(rs: ResultSet) -> list[tuple[str, int]]:
    totals = rs.total_wins().astype(float)
    return [(rs.names[i], int(totals[i])) for i in _ranking(totals)]


@dataclass(frozen=True)
class Morality:
    cooperation_rating: float
    good_partner_rating: float


def morality_metrics(rs: ResultSet) -> dict[str, Morality]:
    """Cooperation rating over all plays; good-partner rating over non-self matches."""
    out = {}
    for i, name in enumerate(rs.names):
        coop = rs.cooperations[i] / rs.plays[i] if rs.plays[i] else math.nan
        partner = (
            rs.good_partner_matches[i] / rs.partner_matches[i] if rs.partner_matches[i] else math.nan
        )
        out[name] = Morality(float(coop), float(partner))
    return out


@dataclass(frozen=True)
class FiveNumber:
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.minimum, self.q1, self.median, self.q3, self.maximum)


def five_number_summary(values) -> FiveNumber:
    """Min, quartiles, max; quartiles by linear interpolation between order statistics."""
    arr = np.asarray(values, dtype=float)
    arr = arr[~np.isnan(arr)]
    if arr.size == 0:
        return FiveNumber(*([math.nan] * 5))
    q = np.percentile(arr, [0, 25, 50, 75, 100], method="linear")
    return FiveNumber(*(float(x) for x in q))


def emit_boxplot_data(rs: ResultSet) -> dict[str, FiveNumber]:
    return {name: five_number_summary(rs.normalized_scores[i]) for i, name in enumerate(rs.names)}
