"""Built-in games, addressable on the command line as ``@name``."""

from __future__ import annotations

from dataclasses import dataclass

from .game import StrategicGame, build_game


@dataclass(frozen=True)
class CatalogEntry:
    game: StrategicGame
    # action counted as cooperating in repeated play, if the game has one
    cooperative: str | None = None


def _two_by_two(name, players, rows, cols, table):
    entries = {
        (r, c): table[k][m] for k, r in enumerate(rows) for m, c in enumerate(cols)
    }
    return build_game(name, players, [rows, cols], entries)


def _build() -> dict[str, CatalogEntry]:
    games = {
        "g1": CatalogEntry(
            _two_by_two(
                "Prisoner's dilemma", ("P1", "P2"), ("C", "D"), ("C", "D"),
                [[(3, 3), (1, 4)],
                 [(4, 1), (2, 2)]],
            ),
            cooperative="C",
        ),
        # rows: naval blockade / air strike; columns: withdraw / maintain
        "g2": CatalogEntry(
            _two_by_two(
                "Missile crisis", ("US", "USSR"), ("B", "A"), ("W", "M"),
                [[(3, 3), (1, 4)],
                 [(2, 2), (4, 1)]],
            ),
        ),
        "g3": CatalogEntry(
            _two_by_two(
                "Trickery", ("P1", "P2"), ("C", "D"), ("C", "D"),
                [[(4, 3), (2, 4)],
                 [(3, 1), (2, 1)]],
            ),
            cooperative="C",
        ),
        "chicken": CatalogEntry(
            _two_by_two(
                "Chicken", ("P1", "P2"), ("C", "D"), ("C", "D"),
                [[(3, 3), (2, 4)],
                 [(4, 2), (1, 1)]],
            ),
            cooperative="C",
        ),
        "matching-pennies": CatalogEntry(
            _two_by_two(
                "Matching pennies", ("P1", "P2"), ("H", "T"), ("H", "T"),
                [[(1, -1), (-1, 1)],
                 [(-1, 1), (1, -1)]],
            ),
        ),
    }
    return games


_CATALOG = _build()


def catalog() -> dict[str, CatalogEntry]:
    return dict(_CATALOG)


def get_entry(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name.removeprefix("@")]
    except KeyError:
        raise KeyError(f"no built-in game {name!r}; try one of {', '.join(_CATALOG)}") from None


def get_game(name: str) -> StrategicGame:
    return get_entry(name).game
