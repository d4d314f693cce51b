"""Playing a single match: noise, probabilistic ending and full history capture."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import StrategyFault
from .game import DEFAULT_GAME, Action, Game
from .rng import Stream, derive_seed
from .strategies.base import Player

# Sub-stream labels folded into the match seed.
_MATCH_STREAM, _SEAT_A_STREAM, _SEAT_B_STREAM = 0, 1, 2


@dataclass(frozen=True)
class MatchSpec:
    """How one match is played.

    With ``prob_end == 0`` the match lasts exactly ``turns`` rounds.  With
    ``prob_end > 0`` each completed round ends the match with probability
    ``prob_end`` and ``turns`` is an optional cap (``None`` for no cap).
    """

    turns: int | None = 200
    prob_end: float = 0.0
    noise: float = 0.0
    game: Game = DEFAULT_GAME
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.noise <= 1:
            raise ValueError(f"noise must lie in [0, 1], got {self.noise}")
        if not 0 <= self.prob_end <= 1:
            raise ValueError(f"prob_end must lie in [0, 1], got {self.prob_end}")
        if self.turns is None:
            if self.prob_end == 0:
                raise ValueError("a match needs turns or a positive prob_end")
        elif self.turns < 1:
            raise ValueError(f"turns must be positive, got {self.turns}")

    @property
    def known_length(self) -> int | None:
        """The length strategies may rely on, or ``None`` when it is random."""
        return self.turns if self.prob_end == 0 else None


@dataclass(frozen=True)
class MatchRecord:
    actions_a: tuple[Action, ...]
    actions_b: tuple[Action, ...]
    score_a: float
    score_b: float
    seed: int
    length: int = field(init=False)

    def __post_init__(self) -> None:
        if len(self.actions_a) != len(self.actions_b):
            raise ValueError("action sequences must have equal length")
        object.__setattr__(self, "length", len(self.actions_a))

    def mirrored(self) -> MatchRecord:
        return MatchRecord(self.actions_b, self.actions_a, self.score_b, self.score_a, self.seed)


def _decide(player: Player, own, opp, rng, length, seat: str) -> Action:
    try:
        action = player.decide(own, opp, rng, length)
    except StrategyFault:
        raise
    except Exception as exc:
        raise StrategyFault(f"{player.name} (seat {seat}) failed on turn {len(own) + 1}: {exc}") from exc
    if not isinstance(action, Action):
        raise StrategyFault(f"{player.name} returned {action!r}, not an Action")
    return action


def play_match(spec: MatchSpec, player_a: Player, player_b: Player) -> MatchRecord:
    """Play one match between fresh copies of two players.

    Each seat gets its own random stream for the strategy's draws; a third
    stream drives noise (seat A then seat B, only when ``noise > 0``) and the
    end-of-round termination test (only when ``prob_end > 0``).  All three
    are derived from ``spec.seed``, so the record is a pure function of the
    spec and the two players.
    """
    a = player_a.clone()
    b = player_b.clone()
    match_rng = Stream(derive_seed(spec.seed, _MATCH_STREAM))
    rng_a = Stream(derive_seed(spec.seed, _SEAT_A_STREAM))
    rng_b = Stream(derive_seed(spec.seed, _SEAT_B_STREAM))
    length = spec.known_length
    cap = spec.turns
    noise, prob_end, game = spec.noise, spec.prob_end, spec.game

    hist_a: list[Action] = []
    hist_b: list[Action] = []
    score_a = score_b = 0
    while True:
        move_a = _decide(a, hist_a, hist_b, rng_a, length, "A")
        move_b = _decide(b, hist_b, hist_a, rng_b, length, "B")
        if noise > 0:
            if match_rng.random() < noise:
                move_a = move_a.flip()
            if match_rng.random() < noise:
                move_b = move_b.flip()
        hist_a.append(move_a)
        hist_b.append(move_b)
        pa, pb = game.score(move_a, move_b)
        score_a += pa
        score_b += pb
        if prob_end > 0 and match_rng.random() < prob_end:
            break
        if cap is not None and len(hist_a) >= cap:
            break
    return MatchRecord(tuple(hist_a), tuple(hist_b), score_a, score_b, spec.seed)
