"""Strategy transformers: wrap a player to derive a new one.

Transformed names use the same syntax the registry parses, e.g.
``Flip(Cooperator)`` or ``Initial(DD,Tit For Tat)``, so every transformed
player can be recreated from its name.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..errors import LengthUnknown
from ..game import Action, actions_to_str
from .base import Player


class TransformedPlayer(Player):
    """Base wrapper: the inner player always decides first, so its state tracks the match."""

    def __init__(self, inner: Player) -> None:
        self.inner = inner
        self.classifier = inner.classifier

    def reset(self) -> None:
        self.inner.reset()

    def strategy(self, own, opp, rng, length):
        action = self.inner.decide(own, opp, rng, length)
        return self.transform(action, own, opp, rng, length)

    def transform(self, action, own, opp, rng, length) -> Action:
        raise NotImplementedError


class FlipPlayer(TransformedPlayer):
    def __init__(self, inner: Player) -> None:
        super().__init__(inner)
        self.name = f"Flip({inner.name})"

    def transform(self, action, own, opp, rng, length):
        return action.flip()


class NoisyPlayer(TransformedPlayer):
    def __init__(self, inner: Player, p: float) -> None:
        if not 0 <= p <= 1:
            raise ValueError("noise probability must lie in [0, 1]")
        super().__init__(inner)
        self.p = p
        self.name = f"Noisy({p},{inner.name})"
        self.classifier = inner.classifier.updated(stochastic=True)

    def transform(self, action, own, opp, rng, length):
        return action.flip() if rng.random() < self.p else action


class InitialPlayer(TransformedPlayer):
    def __init__(self, inner: Player, plays: Sequence[Action]) -> None:
        super().__init__(inner)
        self.plays = tuple(plays)
        self.name = f"Initial({actions_to_str(self.plays)},{inner.name})"
        if self.plays:
            self.classifier = inner.classifier.updated(memory_depth=math.inf)

    def transform(self, action, own, opp, rng, length):
        turn = len(own)
        return self.plays[turn] if turn < len(self.plays) else action


class FinalPlayer(TransformedPlayer):
    def __init__(self, inner: Player, plays: Sequence[Action]) -> None:
        super().__init__(inner)
        self.plays = tuple(plays)
        self.name = f"Final({actions_to_str(self.plays)},{inner.name})"
        self.classifier = inner.classifier.updated(uses_game_length=True, memory_depth=math.inf)

    def transform(self, action, own, opp, rng, length):
        if length is None:
            raise LengthUnknown(f"{self.name} needs a match length known in advance")
        remaining = length - len(own)
        if remaining <= len(self.plays):
            return self.plays[len(self.plays) - remaining]
        return action


@dataclass(frozen=True)
class FlipAll:
    def apply(self, inner: Player) -> Player:
        return FlipPlayer(inner)


@dataclass(frozen=True)
class NoisyFlip:
    p: float

    def apply(self, inner: Player) -> Player:
        return NoisyPlayer(inner, self.p)


@dataclass(frozen=True)
class InitialPlays:
    plays: tuple[Action, ...] = field(default=())

    def apply(self, inner: Player) -> Player:
        return InitialPlayer(inner, self.plays)


@dataclass(frozen=True)
class FinalPlays:
    plays: tuple[Action, ...] = field(default=())

    def apply(self, inner: Player) -> Player:
        return FinalPlayer(inner, self.plays)


Transformer = FlipAll | NoisyFlip | InitialPlays | FinalPlays


def apply_transformer(kind: Transformer, inner: Player) -> Player:
    """Wrap a fresh copy of ``inner``; the original is left untouched."""
    return kind.apply(inner.clone())
