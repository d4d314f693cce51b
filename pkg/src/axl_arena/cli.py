"""Command-line entry point: ``axl-arena <command> [options]``.

Exit status is 0 on success, 2 for configuration errors and 1 for runtime
failures; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

from . import serialize
from .config import RunConfig, parse_config
from .errors import ArenaError, ConfigError, InvalidValue
from .evolution import EcoState, MoranState, run_eco, run_moran
from .game import actions_to_str
from .match import MatchSpec, play_match
from .results import build_result_set, rank_by_wins, rank_strategies
from .strategies.basic import builtin_roster
from .strategies.registry import demo_names
from .tournament import run_tournament
from .training import TrainerConfig, evolve_lookup_table

log = logging.getLogger("axl_arena")

DEFAULT_MORAN_TURNS = 100
_CONFIG_FLAGS = (
    "players",
    "turns",
    "repetitions",
    "noise",
    "prob_end",
    "edge_prob",
    "seed",
    "output_dir",
    "format",
    "jobs",
)


def _global_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML or JSON run configuration")
    common.add_argument("--players", help="comma-separated strategy names")
    common.add_argument("--seed", type=lambda s: int(s, 0), help="master seed (default: $AXL_ARENA_SEED or 0)")
    common.add_argument("--jobs", type=int)
    common.add_argument("--turns", type=int)
    common.add_argument("--repetitions", type=int)
    common.add_argument("--noise", type=float)
    common.add_argument("--prob-end", dest="prob_end", type=float)
    common.add_argument("--edge-prob", dest="edge_prob", type=float)
    common.add_argument("--output-dir", dest="output_dir")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--no-self-play", dest="with_self_play", action="store_const", const=False)
    common.add_argument("-v", "--verbose", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = argparse.ArgumentParser(prog="axl-arena", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("tournament", parents=[common], help="run a tournament and write results")
    sub.add_parser("match", parents=[common], help="play one match between two players")
    moran = sub.add_parser("moran", parents=[common], help="run a Moran process to fixation")
    moran.add_argument("--max-generations", type=int)
    eco = sub.add_parser("eco", parents=[common], help="replicator dynamics on tournament payoffs")
    eco.add_argument("--generations", type=int, default=100)
    train = sub.add_parser("train", parents=[common], help="evolve a LookerUp table")
    train.add_argument("--m", type=int, default=2)
    train.add_argument("--n", type=int, default=2)
    train.add_argument("--population-size", type=int, default=20)
    train.add_argument("--generations", type=int, default=50)
    train.add_argument("--mutation-rate", type=float, default=0.1)
    sub.add_parser("list-strategies", parents=[common], help="show built-in strategies")
    return parser


def _config(args) -> RunConfig:
    flags = {key: getattr(args, key, None) for key in _CONFIG_FLAGS}
    flags["with_self_play"] = getattr(args, "with_self_play", None)
    return parse_config(args.config, flags)


def _explicit_turns(args) -> bool:
    if args.turns is not None:
        return True
    if args.config:
        from .config import load_config_file

        return "turns" in load_config_file(args.config)
    return False


def cmd_tournament(args, out) -> int:
    cfg = _config(args)
    spec = cfg.tournament_spec()
    archive = run_tournament(spec, jobs=cfg.jobs)
    rs = build_result_set(archive, spec)
    outdir = Path(cfg.output_dir)
    serialize.write_interactions(archive, outdir / "interactions.csv")
    serialize.write_summary(rs, outdir / f"summary.{cfg.format}", cfg.format)
    wins = dict(rank_by_wins(rs))
    print(f"{'rank':>4}  {'name':<24} {'median':>8} {'wins':>5}", file=out)
    for rank, (name, median) in enumerate(rank_strategies(rs), start=1):
        print(f"{rank:>4}  {name:<24} {median:>8.4f} {wins[name]:>5}", file=out)
    print(f"wrote {len(archive)} matches to {outdir}", file=out)
    return 0


def cmd_match(args, out) -> int:
    cfg = _config(args)
    if len(cfg.players) != 2:
        raise InvalidValue("players", f"match needs exactly two players, got {len(cfg.players)}")
    a, b = cfg.build_players()
    spec = MatchSpec(turns=cfg.turns, prob_end=cfg.prob_end, noise=cfg.noise, seed=cfg.seed)
    record = play_match(spec, a, b)
    print(f"{actions_to_str(record.actions_a)} / {actions_to_str(record.actions_b)}", file=out)
    print(f"{serialize.format_number(record.score_a)} {serialize.format_number(record.score_b)}", file=out)
    return 0


def cmd_moran(args, out) -> int:
    cfg = _config(args)
    population = cfg.build_players()
    turns = cfg.turns if _explicit_turns(args) else DEFAULT_MORAN_TURNS
    try:
        state = MoranState(population, seed=cfg.seed, turns_per_interaction=turns, noise=cfg.noise)
    except ValueError as exc:
        raise InvalidValue("players", str(exc)) from exc
    result = run_moran(state, max_generations=args.max_generations)
    outdir = Path(cfg.output_dir)
    serialize.write_moran_trajectory(result, outdir / "moran.csv")
    print(f"winner: {result.winner or '(no fixation)'}", file=out)
    print(f"generations: {result.generations}", file=out)
    return 0


def cmd_eco(args, out) -> int:
    cfg = _config(args)
    cfg.with_self_play = True
    spec = cfg.tournament_spec()
    rs = build_result_set(run_tournament(spec, jobs=cfg.jobs), spec)
    trajectory = run_eco(EcoState.from_result_set(rs), args.generations)
    serialize.write_eco_trajectory(trajectory, rs.names, Path(cfg.output_dir) / "eco.csv")
    for name, share in zip(rs.names, trajectory[-1]):
        print(f"{name:<24} {share:.6f}", file=out)
    return 0


def cmd_train(args, out) -> int:
    cfg = _config(args)
    pool = cfg.build_players()
    try:
        config = TrainerConfig(
            m=args.m,
            n=args.n,
            opponent_pool=pool,
            population_size=args.population_size,
            generations=args.generations,
            mutation_rate=args.mutation_rate,
            turns=cfg.turns,
            seed=cfg.seed,
            noise=cfg.noise,
        )
    except ValueError as exc:
        raise InvalidValue("train", str(exc)) from exc
    best, history = evolve_lookup_table(config)
    path = Path(cfg.output_dir) / f"lookerup_{args.m}_{args.n}.txt"
    serialize.write_table(best, path)
    print(f"best fitness: {history[-1]!r}", file=out)
    print(f"wrote {path}", file=out)
    return 0


def cmd_list_strategies(args, out) -> int:
    demo = set(demo_names())
    columns = ("memory_depth", "stochastic", "uses_game_length", "inspects_source", "manipulates_source", "manipulates_state")
    print(f"{'#':>2}  {'name':<22} {'demo':<4} " + " ".join(columns), file=out)
    for i, player in enumerate(builtin_roster(), start=1):
        c = player.classifier.as_dict()
        depth = "inf" if math.isinf(c["memory_depth"]) else str(int(c["memory_depth"]))
        flags = [depth] + [str(c[k]) for k in columns[1:]]
        cells = " ".join(f"{v:<{len(k)}}" for v, k in zip(flags, columns))
        print(f"{i:>2}  {player.name:<22} {'*' if player.name in demo else '':<4} {cells}".rstrip(), file=out)
    return 0


COMMANDS = {
    "tournament": cmd_tournament,
    "match": cmd_match,
    "moran": cmd_moran,
    "eco": cmd_eco,
    "train": cmd_train,
    "list-strategies": cmd_list_strategies,
}


def cli_main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ArenaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())

