"""Run configuration from TOML/JSON files, command-line flags and the environment."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from pathlib import Path

from .errors import InvalidValue
from .strategies.base import Player
from .strategies.basic import STEWART_PLOTKIN_CLASSES
from .strategies.registry import resolve, split_player_list
from .tournament import TournamentSpec

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

SEED_ENV = "AXL_ARENA_SEED"
FORMATS = ("csv", "json")


def _default_players() -> list[str]:
    return [cls().name for cls in STEWART_PLOTKIN_CLASSES]


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or not raw.strip():
        return 0
    try:
        return int(raw, 0)
    except ValueError:
        raise InvalidValue("seed", f"{SEED_ENV}={raw!r} is not an integer") from None


@dataclass
class RunConfig:
    players: list[str] = field(default_factory=_default_players)
    turns: int | None = 200
    repetitions: int = 10
    noise: float = 0.0
    prob_end: float = 0.0
    edge_prob: float = 1.0
    seed: int = field(default_factory=_default_seed)
    with_self_play: bool = True
    output_dir: str = "results"
    format: str = "json"
    jobs: int = 1

    def validate(self) -> RunConfig:
        if not self.players:
            raise InvalidValue("players", "at least one player is required")
        if self.turns is not None and (not isinstance(self.turns, int) or self.turns < 1):
            raise InvalidValue("turns", f"must be a positive integer, got {self.turns!r}")
        if self.turns is None and self.prob_end == 0:
            raise InvalidValue("turns", "required unless prob_end > 0")
        if not isinstance(self.repetitions, int) or self.repetitions < 1:
            raise InvalidValue("repetitions", f"must be a positive integer, got {self.repetitions!r}")
        for name in ("noise", "prob_end"):
            value = getattr(self, name)
            if not 0 <= value <= 1:
                raise InvalidValue(name, f"must lie in [0, 1], got {value}")
        if not 0 < self.edge_prob <= 1:
            raise InvalidValue("edge_prob", f"must lie in (0, 1], got {self.edge_prob}")
        if not 0 <= self.seed < 2**64:
            raise InvalidValue("seed", "must be an unsigned 64-bit integer")
        if self.format not in FORMATS:
            raise InvalidValue("format", f"must be one of {FORMATS}, got {self.format!r}")
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise InvalidValue("jobs", f"must be a positive integer, got {self.jobs!r}")
        self.build_players()
        return self

    def build_players(self) -> list[Player]:
        """Resolve names; ``Name*k`` stands for k separate copies of one player."""
        players = []
        for entry in self.players:
            name, star, count = entry.rpartition("*")
            if star and count.strip().isdigit() and int(count) > 0:
                players.extend(resolve(name.strip()) for _ in range(int(count)))
            else:
                players.append(resolve(entry))
        return players

    def tournament_spec(self) -> TournamentSpec:
        return TournamentSpec(
            players=self.build_players(),
            turns=self.turns,
            repetitions=self.repetitions,
            noise=self.noise,
            prob_end=self.prob_end,
            edge_prob=self.edge_prob,
            master_seed=self.seed,
            with_self_play=self.with_self_play,
        )


_FIELD_NAMES = {f.name for f in fields(RunConfig)}
_NUMERIC = {
    "turns": int,
    "repetitions": int,
    "jobs": int,
    "seed": int,
    "noise": float,
    "prob_end": float,
    "edge_prob": float,
}


def load_config_file(path) -> dict:
    path = Path(path)
    try:
        if path.suffix.lower() == ".toml":
            with open(path, "rb") as fh:
                return tomllib.load(fh)
        if path.suffix.lower() == ".json":
            with open(path, encoding="utf-8") as fh:
                return json.load(fh)
    except FileNotFoundError:
        raise InvalidValue("config", f"{path} does not exist") from None
    except (tomllib.TOMLDecodeError, json.JSONDecodeError) as exc:
        raise InvalidValue("config", f"{path}: {exc}") from None
    raise InvalidValue("config", f"{path}: expected a .toml or .json file")


def _coerce(key: str, value):
    if key == "players":
        if isinstance(value, str):
            return split_player_list(value)
        if isinstance(value, (list, tuple)) and all(isinstance(v, str) for v in value):
            return list(value)
        raise InvalidValue("players", "expected a list of names or a comma-separated string")
    if key == "turns" and value is None:
        return None
    if key in _NUMERIC:
        kind = _NUMERIC[key]
        if isinstance(value, bool):
            raise InvalidValue(key, f"expected a number, got {value!r}")
        try:
            if kind is int:
                if isinstance(value, float) and not value.is_integer():
                    raise ValueError
                return int(value, 0) if isinstance(value, str) else int(value)
            return float(value)
        except (TypeError, ValueError):
            raise InvalidValue(key, f"expected {kind.__name__}, got {value!r}") from None
    if key == "with_self_play":
        if isinstance(value, bool):
            return value
        raise InvalidValue(key, f"expected true or false, got {value!r}")
    return str(value)


def parse_config(path=None, flags: dict | None = None) -> RunConfig:
    """Merge defaults, an optional config file and flags (highest priority).

    ``None`` flag values mean "not given".  Keys may use dashes or underscores;
    ``master_seed`` is accepted as a synonym for ``seed``.
    """
    merged: dict = {}
    sources = []
    if path is not None:
        sources.append(load_config_file(path))
    if flags:
        sources.append({k: v for k, v in flags.items() if v is not None})
    for source in sources:
        for raw_key, value in source.items():
            key = raw_key.replace("-", "_")
            if key == "master_seed":
                key = "seed"
            if key not in _FIELD_NAMES:
                raise InvalidValue(raw_key, "unknown configuration key")
            merged[key] = _coerce(key, value)
    return RunConfig(**merged).validate()
