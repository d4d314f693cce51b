import pytest
from hypothesis import given
from hypothesis import strategies as st

from axl_arena.errors import ConstraintViolation
from axl_arena.game import C, D, DEFAULT_GAME, Action, Game, score_pair, str_to_actions, validate_game


def test_flip():
    assert C.flip() is D
    assert D.flip() is C


@given(st.sampled_from(list(Action)))
def test_flip_involution(a):
    assert a.flip().flip() is a


def test_exactly_two_actions():
    assert len(Action) == 2


def test_default_game_values():
    assert DEFAULT_GAME.as_tuple() == (3, 0, 5, 1)
    assert validate_game(3, 0, 5, 1) == DEFAULT_GAME


@pytest.mark.parametrize(
    "a, b, expected",
    [((C), (C), (3, 3)), (C, D, (0, 5)), (D, C, (5, 0)), (D, D, (1, 1))],
)
def test_score_pair_default(a, b, expected):
    assert score_pair(a, b) == expected


@pytest.mark.parametrize(
    "quad, failing",
    [
        # (R, S, T, P); with P=6 the ordering R > P fails (2R = 6 > T + S = 5 holds).
        ((3, 0, 5, 6), "R > P"),
        ((1, 0, 5, 3), "R > P"),
        ((3, 0, 2, 1), "T > R"),
        ((3, 1, 5, 0), "P > S"),
        ((3, 0, 7, 1), "2R > T + S"),
    ],
)
def test_validate_game_rejects(quad, failing):
    with pytest.raises(ConstraintViolation) as info:
        validate_game(*quad)
    assert info.value.constraint == failing


@given(
    st.floats(-100, 100, allow_nan=False),
    st.floats(-100, 100, allow_nan=False),
    st.floats(-100, 100, allow_nan=False),
    st.floats(-100, 100, allow_nan=False),
)
def test_validator_matches_inequalities(R, S, T, P):
    ok = T > R > P > S and 2 * R > T + S
    if ok:
        assert validate_game(R, S, T, P).as_tuple() == (R, S, T, P)
    else:
        with pytest.raises(ConstraintViolation):
            validate_game(R, S, T, P)


def test_custom_game_scores_first_player_first():
    g = Game(4, -1, 6, 0)
    assert score_pair(C, D, g) == (-1, 6)
    assert score_pair(D, C, g) == (6, -1)


def test_str_to_actions_roundtrip():
    assert str_to_actions("CDDC") == (C, D, D, C)
    with pytest.raises(ValueError):
        str_to_actions("CX")
