"""Actions and the one-shot prisoner's dilemma payoff model."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConstraintViolation


class Action(Enum):
    C = "C"
    D = "D"

    def flip(self) -> Action:
        return D if self is C else C

    def __repr__(self) -> str:
        return self.value

    __str__ = __repr__

    @classmethod
    def from_char(cls, char: str) -> Action:
        try:
            return cls(char.upper())
        except ValueError:
            raise ValueError(f"not an action: {char!r}") from None


C = Action.C
D = Action.D


def actions_to_str(actions) -> str:
    return "".join(a.value for a in actions)


def str_to_actions(text: str) -> tuple[Action, ...]:
    return tuple(Action.from_char(ch) for ch in text.strip())


@dataclass(frozen=True)
class Game:
    """Payoffs (R, S, T, P); use :func:`validate_game` to construct checked instances."""

    R: float = 3
    S: float = 0
    T: float = 5
    P: float = 1

    def __post_init__(self) -> None:
        _check(self.R, self.S, self.T, self.P)

    def score(self, a: Action, b: Action) -> tuple[float, float]:
        if a is C:
            return (self.R, self.R) if b is C else (self.S, self.T)
        return (self.T, self.S) if b is C else (self.P, self.P)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.R, self.S, self.T, self.P)


def _check(R: float, S: float, T: float, P: float) -> None:
    if not T > R:
        raise ConstraintViolation("T > R", f"T > R fails: T={T}, R={R}")
    if not R > P:
        raise ConstraintViolation("R > P", f"R > P fails: R={R}, P={P}")
    if not P > S:
        raise ConstraintViolation("P > S", f"P > S fails: P={P}, S={S}")
    if not 2 * R > T + S:
        raise ConstraintViolation("2R > T + S", f"2R > T + S fails: 2R={2 * R}, T+S={T + S}")


def validate_game(R: float = 3, S: float = 0, T: float = 5, P: float = 1) -> Game:
    """Return a :class:`Game`, raising :class:`ConstraintViolation` naming the failed inequality."""
    return Game(R, S, T, P)


DEFAULT_GAME = Game()


def score_pair(a: Action, b: Action, game: Game = DEFAULT_GAME) -> tuple[float, float]:
    """Payoffs for one round; the first element belongs to the player choosing ``a``."""
    return game.score(a, b)
