"""Structured analysis reports and their text/JSON renderings.

A report is a plain dict. Profiles are written as lists of action labels,
players by their labels, and all lists come in lexicographic profile order,
so ``json.dumps(..., sort_keys=True)`` output is byte-stable.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from .game import Aggregator, StrategicGame
from .solver import (
    PLAYER_ORIENTATIONS,
    Orientation,
    dominance,
    equilibria,
    hyper_equilibria,
)
from .taxonomy import preference_order


def game_section(game: StrategicGame) -> dict:
    return {
        "name": game.name,
        "players": list(game.players),
        "actions": {who: list(acts) for who, acts in zip(game.players, game.actions)},
    }


def equilibria_section(game: StrategicGame, aggregator: Aggregator) -> list[dict]:
    return [
        {
            "profile": list(game.labels(e.profile)),
            "classes": sorted(c.value for c in e.classes),
        }
        for e in equilibria(game, aggregator).entries
    ]


def hyper_section(game: StrategicGame, mode: str, aggregator: Aggregator) -> list[dict]:
    return [
        {
            "profile": list(game.labels(h.profile)),
            "pivots": [game.players[i] for i in h.pivots],
            "mode": h.mode,
        }
        for h in hyper_equilibria(game, mode, aggregator)
    ]


def dominance_section(
    game: StrategicGame,
    aggregator: Aggregator,
    orientations: Iterable[Orientation] = PLAYER_ORIENTATIONS,
) -> dict:
    out = {}
    for o in orientations:
        rep = dominance(game, o, aggregator)
        out[o.value] = {
            game.players[i]: {
                kind: [game.actions[i][a] for a in getattr(rep[i], kind)]
                for kind in (
                    "strictly_dominant",
                    "weakly_dominant",
                    "strictly_dominated",
                    "weakly_dominated",
                )
            }
            for i in range(game.n_players)
        }
    return out


def orders_section(
    game: StrategicGame,
    players: Sequence[int],
    orientations: Iterable[Orientation],
    aggregator: Aggregator,
) -> dict:
    orientations = list(orientations)
    return {
        game.players[i]: {
            o.value: [
                [list(game.labels(p)) for p in tier]
                for tier in preference_order(game, i, o, aggregator).tiers
            ]
            for o in orientations
        }
        for i in players
    }


def full_report(game: StrategicGame, aggregator: Aggregator = Aggregator.SUM) -> dict:
    return {
        "game": game_section(game),
        "equilibria": equilibria_section(game, aggregator),
        "hyper_equilibria": hyper_section(game, "annotated", aggregator),
        "dominance": dominance_section(game, aggregator),
        "orders": orders_section(game, range(game.n_players), list(Orientation), aggregator),
    }


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- text rendering ----------------------------------------------------------


def _fmt_profile(labels: Sequence[str]) -> str:
    return "(" + ", ".join(labels) + ")"


def table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]

    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()

    return [line(header), line(["-" * w for w in widths])] + [line(r) for r in rows]


def render_text(report: dict) -> str:
    game = report["game"]
    out = [f"game: {game['name']}"]
    out += [f"  {who}: {' '.join(acts)}" for who, acts in game["actions"].items()]

    if "equilibria" in report:
        out += ["", "equilibria:"]
        eqs = report["equilibria"]
        if eqs:
            out += table(
                ["profile", "classes"],
                [[_fmt_profile(e["profile"]), " ".join(e["classes"])] for e in eqs],
            )
        else:
            out.append("  none")

    if "hyper_equilibria" in report:
        out += ["", "hyper-equilibria:"]
        hyp = report["hyper_equilibria"]
        if hyp:
            out += table(
                ["profile", "mode", "pivots"],
                [
                    [_fmt_profile(h["profile"]), h["mode"], " ".join(h["pivots"]) or "-"]
                    for h in hyp
                ],
            )
        else:
            out.append("  none")

    if "dominance" in report:
        for orientation, per_player in report["dominance"].items():
            out += ["", f"dominance ({orientation}):"]
            rows = [
                [who]
                + [" ".join(kinds[k]) or "-" for k in (
                    "strictly_dominant", "weakly_dominant",
                    "strictly_dominated", "weakly_dominated",
                )]
                for who, kinds in per_player.items()
            ]
            out += table(
                ["player", "strictly dominant", "weakly dominant",
                 "strictly dominated", "weakly dominated"],
                rows,
            )

    if "orders" in report:
        for who, per_orientation in report["orders"].items():
            for orientation, tiers in per_orientation.items():
                out += ["", f"order for {who} ({orientation}):"]
                for k, tier in enumerate(tiers, start=1):
                    out.append(f"  {k}. " + " ~ ".join(_fmt_profile(p) for p in tier))
    return "\n".join(out) + "\n"
