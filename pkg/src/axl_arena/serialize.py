"""Bit-exact file formats for archives, summaries, trajectories and lookup tables.

All text files use LF line endings and UTF-8.  Numbers are written in their
shortest round-tripping decimal form, with integral values written without a
fractional part (``4`` rather than ``4.0``).
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from .errors import IoFailure
from .game import actions_to_str, str_to_actions
from .match import MatchRecord
from .results import ResultSet, emit_boxplot_data, morality_metrics
from .strategies.lookerup import LookupTable
from .tournament import ArchiveEntry, InteractionArchive, derive_match_seed

INTERACTION_HEADER = (
    "repetition",
    "index_a",
    "index_b",
    "name_a",
    "name_b",
    "actions_a",
    "actions_b",
    "score_a",
    "score_b",
)

SUMMARY_KEYS = (
    "names",
    "ranking",
    "median_normalized_scores",
    "wins",
    "payoff_matrix",
    "cooperation_rates",
    "morality",
    "boxplot",
)


def format_number(x) -> str:
    x = float(x) if isinstance(x, np.floating) else x
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if math.isfinite(x) and x.is_integer():
        return str(int(x))
    return repr(float(x))


def parse_number(text: str):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return float(text)


def _write_text(path, text: str) -> None:
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {os.fspath(path)}: {exc}") from exc


def _read_text(path) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return fh.read()
    except OSError as exc:
        raise IoFailure(f"cannot read {os.fspath(path)}: {exc}") from exc


def _csv_text(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def interactions_csv(archive: InteractionArchive) -> str:
    names = archive.names
    rows = (
        (
            e.repetition,
            e.index_a,
            e.index_b,
            names[e.index_a],
            names[e.index_b],
            actions_to_str(e.record.actions_a),
            actions_to_str(e.record.actions_b),
            format_number(e.record.score_a),
            format_number(e.record.score_b),
        )
        for e in archive.entries
    )
    return _csv_text(INTERACTION_HEADER, rows)


def write_interactions(archive: InteractionArchive, path) -> None:
    _write_text(path, interactions_csv(archive))


def read_interactions(path, master_seed: int = 0, names: Sequence[str] | None = None) -> InteractionArchive:
    """Inverse of :func:`write_interactions`.

    Match seeds are not stored in the file; they are re-derived from
    ``master_seed``.  Player names come from the rows unless ``names`` is
    given (needed when some player never appears).
    """
    reader = csv.reader(io.StringIO(_read_text(path)))
    header = next(reader, None)
    if header is None or tuple(header) != INTERACTION_HEADER:
        raise IoFailure(f"{os.fspath(path)}: unexpected header {header!r}")
    found: dict[int, str] = {}
    entries = []
    for row in reader:
        rep, a, b = int(row[0]), int(row[1]), int(row[2])
        found[a], found[b] = row[3], row[4]
        record = MatchRecord(
            str_to_actions(row[5]),
            str_to_actions(row[6]),
            parse_number(row[7]),
            parse_number(row[8]),
            derive_match_seed(master_seed, a, b, rep),
        )
        entries.append(ArchiveEntry(rep, a, b, record))
    if names is None:
        size = 1 + max(found) if found else 0
        names = [found.get(i, "") for i in range(size)]
    return InteractionArchive(tuple(names), entries, master_seed)


def _json_value(x):
    if isinstance(x, np.ndarray):
        return [_json_value(v) for v in x.tolist()]
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return None if math.isnan(x) else x
    return x


def summary_dict(rs: ResultSet) -> dict:
    morality = morality_metrics(rs)
    boxplot = emit_boxplot_data(rs)
    data = {
        "names": list(rs.names),
        "ranking": [rs.names[i] for i in rs.ranking],
        "median_normalized_scores": rs.median_scores(),
        "wins": rs.wins,
        "payoff_matrix": rs.payoff_matrix,
        "cooperation_rates": rs.cooperation_rates,
        "morality": [
            {
                "name": name,
                "cooperation_rating": morality[name].cooperation_rating,
                "good_partner_rating": morality[name].good_partner_rating,
            }
            for name in rs.names
        ],
        "boxplot": [
            {
                "name": name,
                "min": boxplot[name].minimum,
                "q1": boxplot[name].q1,
                "median": boxplot[name].median,
                "q3": boxplot[name].q3,
                "max": boxplot[name].maximum,
            }
            for name in rs.names
        ],
    }
    return {key: _json_value(data[key]) for key in SUMMARY_KEYS}


def summary_json(rs: ResultSet) -> str:
    return json.dumps(summary_dict(rs), indent=2, allow_nan=False) + "\n"


SUMMARY_CSV_HEADER = (
    "rank",
    "name",
    "median_normalized_score",
    "total_wins",
    "cooperation_rating",
    "good_partner_rating",
    "min",
    "q1",
    "median",
    "q3",
    "max",
)


def summary_csv(rs: ResultSet) -> str:
    medians = rs.median_scores()
    wins = rs.total_wins()
    morality = morality_metrics(rs)
    boxplot = emit_boxplot_data(rs)

    def num(x):
        return "" if isinstance(x, float) and math.isnan(x) else format_number(x)

    rows = []
    for rank, i in enumerate(rs.ranking, start=1):
        name = rs.names[i]
        rows.append(
            (rank, name, num(float(medians[i])), int(wins[i]))
            + (num(morality[name].cooperation_rating), num(morality[name].good_partner_rating))
            + tuple(num(v) for v in boxplot[name].as_tuple())
        )
    return _csv_text(SUMMARY_CSV_HEADER, rows)


def write_summary(rs: ResultSet, path, format: str = "json") -> None:
    if format == "json":
        _write_text(path, summary_json(rs))
    elif format == "csv":
        _write_text(path, summary_csv(rs))
    else:
        raise ValueError(f"unknown summary format {format!r}")


def moran_csv(result) -> str:
    rows = ((g, *counts) for g, counts in enumerate(result.trajectory))
    return _csv_text(("generation", *result.labels), rows)


def eco_csv(trajectory: Sequence[np.ndarray], names: Sequence[str]) -> str:
    rows = ((g, *(format_number(v) for v in x)) for g, x in enumerate(trajectory))
    return _csv_text(("generation", *names), rows)


def write_moran_trajectory(result, path) -> None:
    _write_text(path, moran_csv(result))


def write_eco_trajectory(trajectory, names, path) -> None:
    _write_text(path, eco_csv(trajectory, names))


def write_table(table: LookupTable, path) -> None:
    _write_text(path, table.to_text())


def read_table(path) -> LookupTable:
    return LookupTable.from_text(_read_text(path))
