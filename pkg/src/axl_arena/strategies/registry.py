"""Name resolution for built-in strategies and transformer expressions."""

from __future__ import annotations

import difflib
import re
from collections.abc import Callable, Iterable

from ..errors import UnknownStrategy
from ..game import str_to_actions
from .base import Classifier, Player
from .basic import DEMO_CLASSES, STEWART_PLOTKIN_CLASSES, builtin_roster
from .transformers import FlipPlayer, FinalPlayer, InitialPlayer, NoisyPlayer

_TRANSFORM_RE = re.compile(r"^\s*(Flip|Noisy|Initial|Final)\s*\((.*)\)\s*$", re.DOTALL)


def _factories() -> dict[str, Callable[[], Player]]:
    factories: dict[str, Callable[[], Player]] = {}
    for cls in STEWART_PLOTKIN_CLASSES:
        factories[cls().name] = cls
    return factories


_FACTORIES = _factories()
# Colon-free spellings of the parametrised names.
_ALIASES = {
    "Joss 0.9": "Joss: 0.9",
    "Random 0.5": "Random: 0.5",
    "GTFT 0.33": "GTFT: 0.33",
    "Joss": "Joss: 0.9",
    "Random": "Random: 0.5",
    "GTFT": "GTFT: 0.33",
}


def strategy_names() -> list[str]:
    """Canonical built-in names in roster order."""
    return list(_FACTORIES)


def demo_names() -> list[str]:
    return [cls().name for cls in DEMO_CLASSES]


def _split_first_arg(text: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return text[:i].strip(), text[i + 1 :].strip()
    raise ValueError("expected two comma-separated arguments")


def resolve(name: str) -> Player:
    """Build a fresh player from a built-in name or a transformer expression."""
    match = _TRANSFORM_RE.match(name)
    if match:
        kind, body = match.groups()
        if kind == "Flip":
            return FlipPlayer(resolve(body.strip()))
        try:
            arg, inner_name = _split_first_arg(body)
            if kind == "Noisy":
                return NoisyPlayer(resolve(inner_name), float(arg))
            plays = str_to_actions(arg)
        except ValueError as exc:
            raise UnknownStrategy(name, None) from exc
        if kind == "Initial":
            return InitialPlayer(resolve(inner_name), plays)
        return FinalPlayer(resolve(inner_name), plays)

    key = name.strip()
    key = _ALIASES.get(key, key)
    if key in _FACTORIES:
        return _FACTORIES[key]()
    raise UnknownStrategy(name, suggest(name))


def suggest(name: str) -> str | None:
    candidates = strategy_names() + list(_ALIASES)
    close = difflib.get_close_matches(name.strip(), candidates, n=1, cutoff=0.6)
    if not close:
        return None
    return _ALIASES.get(close[0], close[0])


def split_player_list(text: str) -> list[str]:
    """Split a comma-separated player list, leaving commas inside parentheses alone."""
    names, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            names.append(text[start:i].strip())
            start = i + 1
    names.append(text[start:].strip())
    return [n for n in names if n]


def filter_by_classifier(
    players: Iterable[Player], predicate: Callable[[Classifier], bool]
) -> list[Player]:
    return [p for p in players if predicate(p.classifier)]


__all__ = [
    "builtin_roster",
    "demo_names",
    "filter_by_classifier",
    "resolve",
    "split_player_list",
    "strategy_names",
    "suggest",
]
