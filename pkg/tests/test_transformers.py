import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from axl_arena.errors import LengthUnknown, StrategyFault, UnknownStrategy
from axl_arena.game import C, D, str_to_actions
from axl_arena.match import MatchSpec, play_match
from axl_arena.rng import Stream
from axl_arena.strategies import (
    Cooperator,
    Defector,
    FinalPlays,
    FlipAll,
    InitialPlays,
    NoisyFlip,
    Random,
    TitForTat,
    apply_transformer,
    builtin_roster,
    resolve,
)
from axl_arena.strategies.registry import split_player_list, suggest


def as_str(actions):
    return "".join(a.value for a in actions)


histories = st.lists(st.sampled_from([C, D]), max_size=20)


@given(histories, histories)
def test_flip_cooperator_is_defector(own, opp):
    size = min(len(own), len(opp))
    flipped = apply_transformer(FlipAll(), Cooperator())
    assert flipped.decide(own[:size], opp[:size], None) is D


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(builtin_roster()), st.integers(0, 2**64 - 1))
def test_double_flip_is_identity(player, seed):
    twice = apply_transformer(FlipAll(), apply_transformer(FlipAll(), player))
    spec = MatchSpec(turns=40, noise=0.05, seed=seed)
    opponent = Random()
    r1 = play_match(spec, twice, opponent)
    r2 = play_match(spec, player, opponent)
    assert (r1.actions_a, r1.actions_b) == (r2.actions_a, r2.actions_b)


def test_initial_plays_tft_vs_cooperator():
    p = apply_transformer(InitialPlays(str_to_actions("DD")), TitForTat())
    rec = play_match(MatchSpec(turns=4), p, Cooperator())
    assert as_str(rec.actions_a) == "DDCC"


def test_final_plays_cooperator():
    p = apply_transformer(FinalPlays((D,)), Cooperator())
    rec = play_match(MatchSpec(turns=3), p, Cooperator())
    assert as_str(rec.actions_a) == "CCD"


def test_final_plays_longer_than_match():
    p = apply_transformer(FinalPlays(str_to_actions("DCD")), Cooperator())
    rec = play_match(MatchSpec(turns=2), p, Cooperator())
    assert as_str(rec.actions_a) == "CD"


def test_final_plays_needs_known_length():
    p = apply_transformer(FinalPlays((D,)), Cooperator())
    with pytest.raises(LengthUnknown):
        play_match(MatchSpec(turns=None, prob_end=0.5, seed=1), p, Cooperator())
    assert issubclass(LengthUnknown, StrategyFault)


def test_classifier_updates():
    noisy = apply_transformer(NoisyFlip(0.1), TitForTat())
    final = apply_transformer(FinalPlays((D,)), TitForTat())
    flip = apply_transformer(FlipAll(), TitForTat())
    assert noisy.classifier.stochastic and not TitForTat.classifier.stochastic
    assert final.classifier.uses_game_length
    assert flip.classifier == TitForTat.classifier


def test_names_are_decorated():
    assert apply_transformer(FlipAll(), TitForTat()).name == "Flip(Tit For Tat)"
    assert apply_transformer(NoisyFlip(0.1), Cooperator()).name == "Noisy(0.1,Cooperator)"
    assert apply_transformer(InitialPlays((D, D)), TitForTat()).name == "Initial(DD,Tit For Tat)"
    assert apply_transformer(FinalPlays((D,)), Cooperator()).name == "Final(D,Cooperator)"


def test_noisy_flip_rate():
    p = apply_transformer(NoisyFlip(0.25), Cooperator())
    rng = Stream(8)
    n = 20000
    flips = sum(p.decide([], [], rng) is D for _ in range(n))
    assert abs(flips / n - 0.25) < 0.01


def test_transformer_leaves_inner_untouched():
    inner = TitForTat()
    apply_transformer(FlipAll(), inner)
    assert inner.name == "Tit For Tat"


@pytest.mark.parametrize(
    "name",
    [
        "Flip(Tit For Tat)",
        "Noisy(0.1,Cooperator)",
        "Initial(DD,Tit For Tat)",
        "Final(D,Cooperator)",
        "Flip(Initial(DC,Flip(Grudger)))",
        "Final(DD,Noisy(0.05,Joss: 0.9))",
    ],
)
def test_registry_round_trips_names(name):
    assert resolve(name).name == name


def test_registry_builtin_and_aliases():
    for p in builtin_roster():
        assert resolve(p.name).name == p.name
    assert resolve("Joss 0.9").name == "Joss: 0.9"
    assert resolve("Random 0.5").name == "Random: 0.5"


def test_registry_unknown():
    with pytest.raises(UnknownStrategy) as info:
        resolve("Tit Fot Tat")
    assert info.value.suggestion == "Tit For Tat"
    with pytest.raises(UnknownStrategy):
        resolve("Noisy(abc,Cooperator)")
    with pytest.raises(UnknownStrategy):
        resolve("Flip(Nobody)")
    assert suggest("zzzzzz") is None


def test_split_player_list():
    assert split_player_list("Tit For Tat, Initial(DD,Grudger),Defector") == [
        "Tit For Tat",
        "Initial(DD,Grudger)",
        "Defector",
    ]


def test_transformed_players_in_matches_are_reset():
    p = resolve("Initial(DD,Tit For Tat)")
    spec = MatchSpec(turns=10, seed=3)
    assert play_match(spec, p, Defector()) == play_match(spec, p, Defector())
