"""Command-line interface.

Games are given either as a path to a game file or as ``@name`` for a
built-in game (see ``hyperrational catalog``).

Exit status: 0 on success, 1 on usage errors, 2 when a game file cannot be
read or parsed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import report
from .catalog import catalog, get_entry
from .errors import GameError
from .game import Aggregator, StrategicGame
from .gamefile import parse_game
from .repeated import BUILTIN_POLICIES, NoiseSpec, get_policy, play_repeated, tournament
from .solver import HYPER_MODES, Orientation


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def load_game(source: str) -> tuple[StrategicGame, str | None]:
    """Resolve ``@name`` or a file path to a game and its cooperative action."""
    if source.startswith("@"):
        try:
            entry = get_entry(source)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        return entry.game, entry.cooperative
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc.strerror or exc}") from None
    try:
        return parse_game(text), None
    except GameError as exc:
        raise InputError(f"{source}: {exc}") from None


def _player(game: StrategicGame, spec: str) -> int:
    if spec in game.players:
        return game.players.index(spec)
    if spec.isdigit() and 1 <= int(spec) <= game.n_players:
        return int(spec) - 1
    raise UsageError(
        f"unknown player {spec!r}; use 1..{game.n_players} or one of {', '.join(game.players)}"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyperrational", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def game_command(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("game", help="game file path, or @name for a built-in game")
        p.add_argument("--aggregator", choices=[a.value for a in Aggregator], default="sum",
                       help="how others' payoffs combine in games with more than two players")
        p.add_argument("--format", choices=["table", "json"], default="table")
        return p

    p = game_command("analyze", "equilibrium classes and hyper-equilibria")
    p.add_argument("--full", action="store_true",
                   help="also include dominance and every preference order")
    game_command("dominance", "dominant and dominated actions per orientation")
    p = game_command("order", "preference order of one player")
    p.add_argument("--player", required=True, help="1-based index or player label")
    p.add_argument("--mode", required=True, choices=[o.value for o in Orientation])
    p = game_command("hyper", "hyper-equilibria with pivot players")
    p.add_argument("--mode", choices=HYPER_MODES, default="annotated")

    p = sub.add_parser("simulate", help="repeated play between policies")
    p.add_argument("--game", required=True, help="built-in game name (with or without @) or file")
    p.add_argument("--policies", required=True,
                   help=f"comma-separated, from: {', '.join(sorted(BUILTIN_POLICIES))}")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--epsilon", type=float, default=0.0, help="tremble probability")
    p.add_argument("--cooperative", help="action label counted as cooperation")
    p.add_argument("--tournament", action="store_true",
                   help="round robin over all listed policies instead of a single match")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")

    sub.add_parser("catalog", help="list built-in games")
    return parser


def _cmd_analyze(args, game: StrategicGame) -> dict:
    agg = Aggregator(args.aggregator)
    if args.full:
        return report.full_report(game, agg)
    return {
        "game": report.game_section(game),
        "equilibria": report.equilibria_section(game, agg),
        "hyper_equilibria": report.hyper_section(game, "annotated", agg),
    }


def _cmd_dominance(args, game: StrategicGame) -> dict:
    return {
        "game": report.game_section(game),
        "dominance": report.dominance_section(game, Aggregator(args.aggregator)),
    }


def _cmd_order(args, game: StrategicGame) -> dict:
    i = _player(game, args.player)
    return {
        "game": report.game_section(game),
        "orders": report.orders_section(
            game, [i], [Orientation(args.mode)], Aggregator(args.aggregator)
        ),
    }


def _cmd_hyper(args, game: StrategicGame) -> dict:
    return {
        "game": report.game_section(game),
        "hyper_equilibria": report.hyper_section(game, args.mode, Aggregator(args.aggregator)),
    }


def _simulate(args, out: TextIO) -> None:
    source = args.game
    if not source.startswith("@") and source in catalog():
        source = "@" + source
    game, cooperative = load_game(source)
    cooperative = args.cooperative or cooperative
    try:
        policies = [get_policy(name.strip()) for name in args.policies.split(",")]
    except GameError as exc:
        raise UsageError(str(exc)) from None
    if args.rounds < 1:
        raise UsageError("--rounds must be at least 1")
    try:
        noise = NoiseSpec(args.epsilon, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    if args.tournament:
        result = tournament(game, policies, args.rounds, noise)
        if args.format == "json":
            out.write(report.to_json(result.to_dict()))
        elif args.format == "csv":
            out.write("policy," + ",".join(result.names) + "\n")
            for name, row in zip(result.names, result.scores):
                out.write(name + "," + ",".join(str(x) for x in row) + "\n")
        else:
            rows = [[name] + [str(x) for x in row] for name, row in zip(result.names, result.scores)]
            out.write("\n".join(report.table(["policy", *result.names], rows)) + "\n")
        return

    if len(policies) != 2:
        raise UsageError("a match needs exactly two policies (use --tournament for more)")
    match = play_repeated(game, policies[0], policies[1], args.rounds, noise,
                          cooperative=cooperative)
    if args.format == "json":
        out.write(match.to_json() + "\n")
    elif args.format == "csv":
        out.write(match.to_csv())
    else:
        avg = match.average
        rows = [
            [match.policies[k], game.players[k], str(match.totals[k]),
             f"{float(avg[k]):.4f}", f"{match.cooperation_rate[k]:.4f}"]
            for k in (0, 1)
        ]
        out.write(f"game: {game.name}, rounds: {match.rounds}, "
                  f"epsilon: {noise.epsilon}, seed: {noise.seed}\n")
        out.write("\n".join(report.table(
            ["policy", "seat", "total", "average", "cooperation"], rows)) + "\n")


_GAME_COMMANDS = {
    "analyze": _cmd_analyze,
    "dominance": _cmd_dominance,
    "order": _cmd_order,
    "hyper": _cmd_hyper,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None,
        err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "catalog":
            for name, entry in catalog().items():
                shape = "x".join(str(s) for s in entry.game.shape)
                out.write(f"{name:<18}{shape:<6}{entry.game.name}\n")
        elif args.command == "simulate":
            _simulate(args, out)
        else:
            game, _ = load_game(args.game)
            result = _GAME_COMMANDS[args.command](args, game)
            out.write(report.to_json(result) if args.format == "json"
                      else report.render_text(result))
    except UsageError as exc:
        err.write(str(exc).rstrip("\n") + "\n")
        return 1
    except InputError as exc:
        err.write(str(exc) + "\n")
        return 2
    except GameError as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
