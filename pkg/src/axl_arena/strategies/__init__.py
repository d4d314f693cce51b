from .base import Classifier, History, Player
from .basic import (
    GTFT,
    Calculator,
    Cooperator,
    Defector,
    Grudger,
    HardGoByMajority,
    HardProber,
    HardTitFor2Tats,
    HardTitForTat,
    Joss,
    MemoryOnePlayer,
    Prober,
    Prober2,
    Prober3,
    Random,
    TitFor2Tats,
    TitForTat,
    WinStayLoseShift,
    ZDExtort2,
    ZDGTFT2,
    builtin_roster,
    demo_strategies,
    has_cycle,
)
from .lookerup import LookerUp, LookupTable, all_genomes, lookup_decide, table_keys, tit_for_tat_table
from .registry import filter_by_classifier, resolve, split_player_list, strategy_names
from .transformers import (
    FinalPlays,
    FlipAll,
    InitialPlays,
    NoisyFlip,
    apply_transformer,
)

__all__ = [
    "Calculator",
    "Classifier",
    "Cooperator",
    "Defector",
    "FinalPlays",
    "FlipAll",
    "GTFT",
    "Grudger",
    "HardGoByMajority",
    "HardProber",
    "HardTitFor2Tats",
    "HardTitForTat",
    "History",
    "InitialPlays",
    "Joss",
    "LookerUp",
    "LookupTable",
    "MemoryOnePlayer",
    "NoisyFlip",
    "Player",
    "Prober",
    "Prober2",
    "Prober3",
    "Random",
    "TitFor2Tats",
    "TitForTat",
    "WinStayLoseShift",
    "ZDExtort2",
    "ZDGTFT2",
    "all_genomes",
    "apply_transformer",
    "builtin_roster",
    "demo_strategies",
    "filter_by_classifier",
    "has_cycle",
    "lookup_decide",
    "resolve",
    "split_player_list",
    "strategy_names",
    "table_keys",
    "tit_for_tat_table",
]
