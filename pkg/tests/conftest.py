import itertools

import pytest

from axl_arena.game import C, D
from axl_arena.strategies import Classifier, Player


class SequencePlayer(Player):
    """Plays a fixed sequence, cycling when it runs out."""

    classifier = Classifier(memory_depth=float("inf"))

    def __init__(self, moves):
        self.moves = tuple(moves)
        self.name = "Sequence(" + "".join(m.value for m in self.moves) + ")"

    def strategy(self, own, opp, rng, length):
        return self.moves[len(own) % len(self.moves)]


class ExplodingStream:
    """Stands in for a random stream that must never be consulted."""

    def __getattr__(self, name):
        raise AssertionError(f"deterministic strategy drew randomness via {name}")


def all_sequences(max_len):
    for n in range(max_len + 1):
        yield from itertools.product((C, D), repeat=n)


@pytest.fixture
def exploding_rng():
    return ExplodingStream()


# Filled by the acceptance suite and echoed once at the end of the run.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
