"""LookerUp: actions keyed by the opponent's opening moves and the recent joint history.

A key is ``(opp_first, pairs)`` where ``opp_first`` is the opponent's first
``m`` actions and ``pairs`` the last ``n`` (own, opponent) action pairs.
Before ``max(m, n)`` rounds have been played the key is not yet defined and
the player uses ``initial_actions`` instead.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..errors import KeyMissing
from ..game import C, D, Action, actions_to_str, str_to_actions
from .base import Classifier, History, Player

PAIRS: tuple[tuple[Action, Action], ...] = ((C, C), (C, D), (D, C), (D, D))

Key = tuple[tuple[Action, ...], tuple[tuple[Action, Action], ...]]


def table_keys(m: int, n: int) -> list[Key]:
    """All 2**m * 4**n keys in canonical order (C before D, pairs CC, CD, DC, DD)."""
    firsts = list(itertools.product((C, D), repeat=m))
    recents = list(itertools.product(PAIRS, repeat=n))
    return [(f, r) for f in firsts for r in recents]


@dataclass(frozen=True)
class LookupTable:
    m: int
    n: int
    table: dict
    initial_actions: tuple[Action, ...]

    def __post_init__(self) -> None:
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        object.__setattr__(self, "initial_actions", tuple(self.initial_actions))
        if len(self.initial_actions) != self.warmup:
            raise ValueError(
                f"initial_actions must have length max(m, n) = {self.warmup}, "
                f"got {len(self.initial_actions)}"
            )
        expected = 2**self.m * 4**self.n
        missing = [k for k in table_keys(self.m, self.n) if k not in self.table]
        if missing or len(self.table) != expected:
            raise ValueError(
                f"table must be total over {expected} keys; {len(missing)} missing"
            )

    @property
    def warmup(self) -> int:
        return max(self.m, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LookupTable):
            return NotImplemented
        return self.genome() == other.genome() and (self.m, self.n) == (other.m, other.n)

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.genome()))

    @classmethod
    def from_function(cls, m: int, n: int, rule, initial_actions: Sequence[Action] | None = None) -> LookupTable:
        """Tabulate ``rule(opp_first, pairs) -> Action`` over every key."""
        table = {key: rule(*key) for key in table_keys(m, n)}
        if initial_actions is None:
            initial_actions = (C,) * max(m, n)
        return cls(m, n, table, tuple(initial_actions))

    @classmethod
    def from_genome(cls, m: int, n: int, genome: Sequence[Action]) -> LookupTable:
        keys = table_keys(m, n)
        if len(genome) != len(keys) + max(m, n):
            raise ValueError(f"genome length must be {len(keys) + max(m, n)}")
        table = dict(zip(keys, genome))
        return cls(m, n, table, tuple(genome[len(keys):]))

    def genome(self) -> tuple[Action, ...]:
        """Table entries in canonical key order followed by the initial actions."""
        return tuple(self.table[k] for k in table_keys(self.m, self.n)) + self.initial_actions

    def to_text(self) -> str:
        lines = [f"{self.m} {self.n}"]
        for first, pairs in table_keys(self.m, self.n):
            key = actions_to_str(first) + "".join(a.value + b.value for a, b in pairs)
            lines.append(f"{key} -> {self.table[first, pairs].value}")
        lines.append(f"initial: {actions_to_str(self.initial_actions)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> LookupTable:
        lines = [ln.rstrip("\r") for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty lookup table text")
        try:
            m, n = (int(x) for x in lines[0].split())
        except ValueError:
            raise ValueError(f"bad header line {lines[0]!r}; expected 'm n'") from None
        table: dict = {}
        initial: tuple[Action, ...] | None = None
        for line in lines[1:]:
            if line.startswith("initial:"):
                initial = str_to_actions(line.partition(":")[2])
                continue
            key_text, sep, value = line.partition("->")
            if not sep:
                raise ValueError(f"bad table line {line!r}")
            key_actions = str_to_actions(key_text)
            if len(key_actions) != m + 2 * n:
                raise ValueError(f"key {key_text.strip()!r} should have {m + 2 * n} actions")
            first = key_actions[:m]
            rest = key_actions[m:]
            pairs = tuple((rest[i], rest[i + 1]) for i in range(0, len(rest), 2))
            table[first, pairs] = Action.from_char(value.strip())
        if initial is None:
            raise ValueError("missing 'initial:' line")
        return cls(m, n, table, initial)


def lookup_decide(table: LookupTable, own: History, opp: History) -> Action:
    turn = len(own)
    if turn < table.warmup:
        return table.initial_actions[turn]
    first = tuple(opp[: table.m])
    pairs = tuple(zip(own[len(own) - table.n :], opp[len(opp) - table.n :])) if table.n else ()
    try:
        return table.table[first, pairs]
    except KeyError:
        raise KeyMissing(f"no table entry for {(first, pairs)!r}") from None


def tit_for_tat_table() -> LookupTable:
    """The m=0, n=1 table that copies the opponent's previous move."""
    return LookupTable.from_function(0, 1, lambda first, pairs: pairs[0][1], (C,))


class LookerUp(Player):
    def __init__(self, table: LookupTable | None = None, name: str | None = None) -> None:
        self.table = table if table is not None else tit_for_tat_table()
        self.name = name or f"LookerUp {self.table.m} {self.table.n}"
        m, n = self.table.m, self.table.n
        self.classifier = Classifier(memory_depth=math.inf if m else n)

    def strategy(self, own, opp, rng, length):
        return lookup_decide(self.table, own, opp)


def all_genomes(m: int, n: int) -> Iterable[tuple[Action, ...]]:
    size = 2**m * 4**n + max(m, n)
    return itertools.product((C, D), repeat=size)
