"""Reproducible iterated prisoner's dilemma tournaments and evolutionary dynamics."""

from .errors import (
    ConstraintViolation,
    DegenerateFitness,
    EmptyArchive,
    InvalidValue,
    IoFailure,
    KeyMissing,
    LengthUnknown,
    NonPositiveFitness,
    StrategyFault,
    UnknownStrategy,
)
from .evolution import EcoState, MoranResult, MoranState, replicator_step, run_eco, run_moran
from .game import C, D, DEFAULT_GAME, Action, Game, score_pair, validate_game
from .match import MatchRecord, MatchSpec, play_match
from .results import (
    ResultSet,
    build_result_set,
    emit_boxplot_data,
    morality_metrics,
    rank_by_wins,
    rank_strategies,
)
from .rng import Stream, derive_seed
from .strategies import *  # noqa: F401,F403
from .strategies import __all__ as _strategy_names
from .tournament import (
    InteractionArchive,
    TournamentSpec,
    derive_match_seed,
    generate_edges,
    run_tournament,
)
from .training import TrainerConfig, evaluate_table, evolve_lookup_table

__version__ = "0.1.0"

__all__ = [
    "Action",
    "C",
    "ConstraintViolation",
    "D",
    "DEFAULT_GAME",
    "DegenerateFitness",
    "EcoState",
    "EmptyArchive",
    "Game",
    "InteractionArchive",
    "InvalidValue",
    "IoFailure",
    "KeyMissing",
    "LengthUnknown",
    "MatchRecord",
    "MatchSpec",
    "MoranResult",
    "MoranState",
    "NonPositiveFitness",
    "ResultSet",
    "StrategyFault",
    "Stream",
    "TournamentSpec",
    "TrainerConfig",
    "UnknownStrategy",
    "build_result_set",
    "derive_match_seed",
    "derive_seed",
    "emit_boxplot_data",
    "evaluate_table",
    "evolve_lookup_table",
    "generate_edges",
    "morality_metrics",
    "play_match",
    "rank_by_wins",
    "rank_strategies",
    "replicator_step",
    "run_eco",
    "run_moran",
    "run_tournament",
    "score_pair",
    "validate_game",
    *_strategy_names,
]
