import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axl_arena.errors import IoFailure
from axl_arena.evolution import EcoState, MoranState, run_eco, run_moran
from axl_arena.results import build_result_set
from axl_arena.serialize import (
    INTERACTION_HEADER,
    SUMMARY_KEYS,
    format_number,
    interactions_csv,
    read_interactions,
    read_table,
    summary_csv,
    summary_json,
    write_eco_trajectory,
    write_interactions,
    write_moran_trajectory,
    write_summary,
    write_table,
)
from axl_arena.strategies import Cooperator, Defector, TitForTat, builtin_roster, demo_strategies, tit_for_tat_table
from axl_arena.tournament import InteractionArchive, TournamentSpec, run_tournament

HEADER = ",".join(INTERACTION_HEADER) + "\n"


def tournament(players, **kwargs):
    spec = TournamentSpec(players, **kwargs)
    archive = run_tournament(spec)
    return archive, build_result_set(archive, spec)


def test_tft_vs_defector_row():
    archive, _ = tournament([TitForTat(), Defector()], turns=5, repetitions=1, with_self_play=False)
    assert interactions_csv(archive) == HEADER + "0,0,1,Tit For Tat,Defector,CDDDD,DDDDD,4,9\n"


def test_empty_archive_is_header_only(tmp_path):
    path = tmp_path / "interactions.csv"
    write_interactions(InteractionArchive(("A",), []), path)
    assert path.read_bytes() == HEADER.encode()


def test_lf_line_endings(tmp_path):
    archive, _ = tournament(demo_strategies(), turns=5, repetitions=2)
    path = tmp_path / "i.csv"
    write_interactions(archive, path)
    assert b"\r" not in path.read_bytes()


def test_interactions_round_trip(tmp_path):
    archive, _ = tournament(builtin_roster(), turns=20, repetitions=2, noise=0.1, master_seed=31)
    path = tmp_path / "i.csv"
    write_interactions(archive, path)
    assert read_interactions(path, master_seed=31) == archive


def test_round_trip_with_fractional_scores(tmp_path):
    from axl_arena.game import Game

    archive, _ = tournament([TitForTat(), Defector()], turns=3, repetitions=1, game=Game(R=3.5, S=0.25, T=5.1, P=1.2))
    path = tmp_path / "i.csv"
    write_interactions(archive, path)
    assert read_interactions(path) == archive


def test_read_rejects_bad_header(tmp_path):
    path = tmp_path / "i.csv"
    path.write_text("a,b\n")
    with pytest.raises(IoFailure):
        read_interactions(path)
    with pytest.raises(IoFailure):
        read_interactions(tmp_path / "missing.csv")


@given(st.one_of(st.integers(-10**6, 10**6), st.floats(allow_nan=False, allow_infinity=False)))
def test_format_number_round_trips(x):
    text = format_number(x)
    assert float(text) == x
    if float(x).is_integer():
        assert "." not in text and "e" not in text.lower() or abs(x) >= 1e16


def test_format_number_examples():
    assert format_number(4.0) == "4"
    assert format_number(np.float64(0.1)) == "0.1"
    assert format_number(np.int64(9)) == "9"


def test_summary_is_byte_identical(tmp_path):
    _, rs1 = tournament(demo_strategies(), turns=30, repetitions=4, noise=0.05, master_seed=12)
    _, rs2 = tournament(demo_strategies(), turns=30, repetitions=4, noise=0.05, master_seed=12)
    write_summary(rs1, tmp_path / "a.json")
    write_summary(rs2, tmp_path / "b.json")
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_summary_key_order_and_types():
    _, rs = tournament(demo_strategies(), turns=10, repetitions=2)
    data = json.loads(summary_json(rs))
    assert tuple(data) == SUMMARY_KEYS
    assert data["names"] == [p.name for p in demo_strategies()]
    assert sorted(data["ranking"]) == sorted(data["names"])
    assert [b["name"] for b in data["boxplot"]] == data["names"]


def test_single_strategy_ranking():
    _, rs = tournament([Cooperator()], turns=5, repetitions=2)
    data = json.loads(summary_json(rs))
    assert data["ranking"] == ["Cooperator"]
    assert data["median_normalized_scores"] == [None]


def test_cooperator_defector_payoff_matrix():
    _, rs = tournament([Cooperator(), Defector()], turns=10, repetitions=1, with_self_play=False)
    text = summary_json(rs)
    assert "NaN" not in text
    assert json.loads(text)["payoff_matrix"] == [[None, 0.0], [5.0, None]]


def test_summary_csv():
    _, rs = tournament([Cooperator(), Defector()], turns=10, repetitions=1, with_self_play=False)
    lines = summary_csv(rs).splitlines()
    assert lines[0].startswith("rank,name,median_normalized_score,total_wins")
    assert lines[1].split(",")[:4] == ["1", "Defector", "5", "1"]
    assert lines[2].split(",")[:4] == ["2", "Cooperator", "0", "0"]


def test_unknown_summary_format(tmp_path):
    _, rs = tournament([Cooperator()], turns=2, repetitions=1)
    with pytest.raises(ValueError):
        write_summary(rs, tmp_path / "x", format="xml")


def test_trajectory_files(tmp_path):
    result = run_moran(MoranState([Defector(), Cooperator()], seed=1, turns_per_interaction=5))
    write_moran_trajectory(result, tmp_path / "moran.csv")
    lines = (tmp_path / "moran.csv").read_text().splitlines()
    assert lines[0] == "generation,Defector,Cooperator"
    assert lines[1] == "0,1,1"
    assert len(lines) == result.generations + 2

    traj = run_eco(EcoState([0.5, 0.5], [[3.0, 0.0], [5.0, 1.0]]), 2)
    write_eco_trajectory(traj, ["Cooperator", "Defector"], tmp_path / "eco.csv")
    lines = (tmp_path / "eco.csv").read_text().splitlines()
    assert lines[:3] == ["generation,Cooperator,Defector", "0,0.5,0.5", "1,0.3333333333333333,0.6666666666666666"]


def test_table_file_round_trip(tmp_path):
    write_table(tit_for_tat_table(), tmp_path / "t.txt")
    assert read_table(tmp_path / "t.txt") == tit_for_tat_table()


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**64 - 1))
def test_interactions_are_pure_function_of_seed(seed):
    a, _ = tournament(demo_strategies(), turns=8, repetitions=2, noise=0.1, master_seed=seed)
    b, _ = tournament(demo_strategies(), turns=8, repetitions=2, noise=0.1, master_seed=seed)
    assert interactions_csv(a) == interactions_csv(b)
