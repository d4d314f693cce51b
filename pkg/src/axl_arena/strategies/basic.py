"""The demo strategies and the 19-strategy Stewart & Plotkin (2012) roster."""

from __future__ import annotations

import math

from ..game import C, D, Action
from .base import Classifier, History, Player, cooperation_probability_choice

INF = math.inf


def _classifier(memory_depth: float, stochastic: bool = False) -> Classifier:
    return Classifier(memory_depth=memory_depth, stochastic=stochastic)


class Cooperator(Player):
    name = "Cooperator"
    classifier = _classifier(0)

    def strategy(self, own, opp, rng, length):
        return C


class Defector(Player):
    name = "Defector"
    classifier = _classifier(0)

    def strategy(self, own, opp, rng, length):
        return D


class Random(Player):
    """Cooperates with a fixed probability every round."""

    classifier = _classifier(0, stochastic=True)

    def __init__(self, p: float = 0.5) -> None:
        if not 0 <= p <= 1:
            raise ValueError("p must lie in [0, 1]")
        self.p = p
        self.name = f"Random: {p}"

    def strategy(self, own, opp, rng, length):
        return cooperation_probability_choice(self.p, rng)


class TitForTat(Player):
    name = "Tit For Tat"
    classifier = _classifier(1)

    def strategy(self, own, opp, rng, length):
        return opp[-1] if opp else C


class TitFor2Tats(Player):
    name = "Tit For 2 Tats"
    classifier = _classifier(2)

    def strategy(self, own, opp, rng, length):
        return D if len(opp) >= 2 and opp[-1] is D and opp[-2] is D else C


class HardTitForTat(Player):
    """Defects if the opponent defected in any of the last three rounds."""

    name = "Hard Tit For Tat"
    classifier = _classifier(3)

    def strategy(self, own, opp, rng, length):
        return D if D in opp[-3:] else C


class HardTitFor2Tats(Player):
    """Defects if the last three opponent moves contain two consecutive defections."""

    name = "Hard Tit For 2 Tats"
    classifier = _classifier(3)

    def strategy(self, own, opp, rng, length):
        last = tuple(opp[-3:])
        for x, y in zip(last, last[1:]):
            if x is D and y is D:
                return D
        return C


class Grudger(Player):
    """A player starts by cooperating however will defect if
    at any point the opponent has defected."""

    name = "Grudger"
    classifier = _classifier(INF)

    def strategy(self, own, opp, rng, length):
        return D if D in opp else C


class Joss(Player):
    """Tit For Tat that sneaks in a defection when it would cooperate."""

    classifier = _classifier(1, stochastic=True)

    def __init__(self, p: float = 0.9) -> None:
        self.p = p
        self.name = f"Joss: {p}"

    def strategy(self, own, opp, rng, length):
        if opp and opp[-1] is D:
            return D
        return cooperation_probability_choice(self.p, rng)


class WinStayLoseShift(Player):
    """Repeats its last move after a payoff of R or T, i.e. when the opponent cooperated."""

    name = "Win-Stay Lose-Shift"
    classifier = _classifier(1)

    def strategy(self, own, opp, rng, length):
        if not own:
            return C
        return own[-1] if opp[-1] is C else own[-1].flip()


class MemoryOnePlayer(Player):
    """Cooperation probabilities conditioned on the previous (own, opponent) pair.

    ``four_vector`` is (p_CC, p_CD, p_DC, p_DD).
    """

    name = "Memory One"
    classifier = _classifier(1, stochastic=True)

    def __init__(self, four_vector: tuple[float, float, float, float], initial: Action = C) -> None:
        if len(four_vector) != 4 or not all(0 <= p <= 1 for p in four_vector):
            raise ValueError("four_vector needs four probabilities in [0, 1]")
        self.four_vector = tuple(four_vector)
        self.initial = initial
        self._probs = {
            (C, C): four_vector[0],
            (C, D): four_vector[1],
            (D, C): four_vector[2],
            (D, D): four_vector[3],
        }
        self.classifier = _classifier(1, stochastic=any(0 < p < 1 for p in four_vector))

    def strategy(self, own, opp, rng, length):
        if not own:
            return self.initial
        return cooperation_probability_choice(self._probs[own[-1], opp[-1]], rng)


class ZDExtort2(MemoryOnePlayer):
    """Zero-determinant extortioner with chi = 2 for the (3, 0, 5, 1) game."""

    name = "ZD-Extort-2"

    def __init__(self) -> None:
        super().__init__((8 / 9, 1 / 2, 1 / 3, 0))


class ZDGTFT2(MemoryOnePlayer):
    name = "ZD-GTFT-2"

    def __init__(self) -> None:
        super().__init__((1, 1 / 8, 1, 1 / 4))


class GTFT(MemoryOnePlayer):
    """Generous Tit For Tat: forgives a defection with probability ``p``.

    The default 1/3 is min(1 - (T-R)/(R-S), (R-P)/(T-P)) for the (3, 0, 5, 1)
    game and is shown to two places in the name.
    """

    def __init__(self, p: float = 1 / 3) -> None:
        super().__init__((1, p, 1, p))
        self.p = p
        self.name = f"GTFT: {round(p, 2)}"


def _defect_forever_prober(opening: tuple[Action, ...], test) -> type:
    """Build a prober that plays ``opening``, then defects forever if ``test(opp)`` else plays TFT."""
    k = len(opening)

    def strategy(self, own, opp, rng, length):
        turn = len(own)
        if turn < k:
            return opening[turn]
        if test(opp):
            return D
        return opp[-1]

    return strategy


class Prober(Player):
    """Opens D, C, C; exploits an opponent that did not retaliate in rounds 2 and 3."""

    name = "Prober"
    classifier = _classifier(INF)
    strategy = _defect_forever_prober((D, C, C), lambda opp: opp[1] is C and opp[2] is C)


class Prober2(Player):
    """Opens D, C, C; cooperates forever after an opponent who answers D then C."""

    name = "Prober 2"
    classifier = _classifier(INF)

    def strategy(self, own, opp, rng, length):
        turn = len(own)
        if turn < 3:
            return (D, C, C)[turn]
        if opp[1] is D and opp[2] is C:
            return C
        return opp[-1]


class Prober3(Player):
    name = "Prober 3"
    classifier = _classifier(INF)
    strategy = _defect_forever_prober((D, C), lambda opp: opp[1] is C)


class HardProber(Player):
    name = "Hard Prober"
    classifier = _classifier(INF)
    strategy = _defect_forever_prober((D, D, C, C), lambda opp: opp[1] is C and opp[2] is C)


def has_cycle(moves: History, max_period: int = 10) -> bool:
    """True if ``moves`` is an exact repetition of a block of length 1..max_period.

    Only block lengths dividing ``len(moves)`` count, so the block tiles the
    whole sequence with no partial copy at the end.
    """
    n = len(moves)
    for period in range(1, min(max_period, n // 2) + 1):
        if n % period:
            continue
        block = tuple(moves[:period])
        if all(tuple(moves[i : i + period]) == block for i in range(period, n, period)):
            return True
    return False


class Calculator(Player):
    """Plays Joss for 20 rounds, then defects forever against a cyclic opponent, else TFT."""

    name = "Calculator"
    classifier = _classifier(INF, stochastic=True)
    probe_length = 20

    def strategy(self, own, opp, rng, length):
        turn = len(own)
        if turn < self.probe_length:
            if opp and opp[-1] is D:
                return D
            return cooperation_probability_choice(0.9, rng)
        if has_cycle(opp[: self.probe_length]):
            return D
        return opp[-1]


class HardGoByMajority(Player):
    """Cooperates only while the opponent's cooperations strictly outnumber its defections."""

    name = "Hard Go By Majority"
    classifier = _classifier(INF)

    def strategy(self, own, opp, rng, length):
        cooperations = sum(1 for a in opp if a is C)
        return C if cooperations > len(opp) - cooperations else D


STEWART_PLOTKIN_CLASSES = (
    Cooperator,
    Defector,
    ZDExtort2,
    Joss,
    HardTitForTat,
    HardTitFor2Tats,
    TitForTat,
    Grudger,
    TitFor2Tats,
    WinStayLoseShift,
    Random,
    ZDGTFT2,
    GTFT,
    HardProber,
    Prober,
    Prober2,
    Prober3,
    Calculator,
    HardGoByMajority,
)

DEMO_CLASSES = (Cooperator, Defector, TitForTat, Grudger, Random)


def builtin_roster() -> list[Player]:
    """Fresh instances of the Stewart & Plotkin tournament strategies, in roster order."""
    return [cls() for cls in STEWART_PLOTKIN_CLASSES]


def demo_strategies() -> list[Player]:
    return [cls() for cls in DEMO_CLASSES]
