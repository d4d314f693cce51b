"""Player interface and classifier metadata."""

from __future__ import annotations

import copy
import math
from collections.abc import Sequence
from dataclasses import asdict, dataclass, replace

from ..game import Action
from ..rng import Stream

History = Sequence[Action]


@dataclass(frozen=True)
class Classifier:
    memory_depth: float = math.inf
    stochastic: bool = False
    uses_game_length: bool = False
    inspects_source: bool = False
    manipulates_source: bool = False
    manipulates_state: bool = False

    def __post_init__(self) -> None:
        if not self.memory_depth >= 0:
            raise ValueError("memory_depth must be non-negative or infinite")

    def as_dict(self) -> dict:
        return asdict(self)

    def updated(self, **changes) -> Classifier:
        return replace(self, **changes)


class Player:
    """A decision rule plus per-match state.

    Subclasses set ``name`` and ``classifier`` and implement :meth:`strategy`.
    ``strategy`` receives both post-noise histories, the player's own random
    stream, and the match length when it is fixed in advance (``None``
    otherwise).  Deterministic strategies must not touch ``rng``.
    """

    name: str = "Player"
    classifier: Classifier = Classifier()

    def strategy(
        self,
        own: History,
        opp: History,
        rng: Stream,
        length: int | None,
    ) -> Action:
        raise NotImplementedError

    def decide(
        self,
        own: History,
        opp: History,
        rng: Stream,
        length: int | None = None,
    ) -> Action:
        return self.strategy(own, opp, rng, length)

    def reset(self) -> None:
        """Return to the initial state; stateless players need not override."""

    def clone(self, name: str | None = None) -> Player:
        """A fresh, reset copy; ``name`` relabels it (e.g. a neutral mutant)."""
        other = copy.deepcopy(self)
        other.reset()
        if name is not None:
            other.name = name
        return other

    def __repr__(self) -> str:
        return self.name


def cooperation_probability_choice(p: float, rng: Stream) -> Action:
    """C with probability ``p``; draws nothing when the outcome is certain."""
    if p >= 1:
        return Action.C
    if p <= 0:
        return Action.D
    return Action.C if rng.random() < p else Action.D
