"""Finite n-player strategic games with exact rational payoffs.

Profiles are plain tuples of action indices, one per player. A partial
profile is the same tuple with ``None`` in the slot of the player whose
action is left open.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    ArityMismatchError,
    DuplicateProfileError,
    FreeSlotMismatchError,
    GameError,
    IndexOutOfRangeError,
    MissingProfileError,
    UnknownActionError,
)

Profile = tuple[int, ...]
PayoffValue = Union[int, Fraction, str]


class Aggregator(str, enum.Enum):
    """How the payoffs of everyone but player i collapse to one number.

    Two-player games ignore the choice: the opponent's payoff is used as is.
    """

    SUM = "sum"
    MIN = "min"
    MAX = "max"

    def reduce(self, values: Sequence[Fraction]) -> Fraction:
        if self is Aggregator.SUM:
            return sum(values, Fraction(0))
        if self is Aggregator.MIN:
            return min(values)
        return max(values)


@dataclass(frozen=True)
class PartialProfile:
    """Actions of all players but one; the free slot holds ``None``."""

    choices: tuple[int | None, ...]

    def __post_init__(self) -> None:
        free = [k for k, c in enumerate(self.choices) if c is None]
        if len(free) != 1:
            raise FreeSlotMismatchError(
                f"partial profile needs exactly one free slot, got {len(free)}"
            )

    @classmethod
    def around(cls, profile: Sequence[int], player: int) -> PartialProfile:
        """Open ``player``'s slot in a full profile."""
        choices: list[int | None] = list(profile)
        choices[player] = None
        return cls(tuple(choices))

    @property
    def free(self) -> int:
        return self.choices.index(None)

    def complete(self, action: int) -> Profile:
        return tuple(action if c is None else c for c in self.choices)


def _to_fraction(value: object) -> Fraction:
    if isinstance(value, bool):
        raise GameError(f"payoff must be a rational number, got {value!r}")
    if isinstance(value, (int, Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise GameError(f"not a rational number: {value!r}") from exc
    raise GameError(
        f"payoff must be an int, Fraction or 'p/q' string, got {type(value).__name__}"
    )


@dataclass(frozen=True)
class StrategicGame:
    """An immutable normal-form game.

    ``payoffs`` maps every profile to the vector of all players' payoffs.
    Build instances with :func:`build_game`, which validates coverage.
    """

    name: str
    players: tuple[str, ...]
    actions: tuple[tuple[str, ...], ...]
    payoffs: Mapping[Profile, tuple[Fraction, ...]] = field(repr=False)

    @property
    def n_players(self) -> int:
        return len(self.players)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.actions)

    def profiles(self) -> list[Profile]:
        return enumerate_profiles(self)

    def labels(self, profile: Sequence[int]) -> tuple[str, ...]:
        return tuple(self.actions[k][a] for k, a in enumerate(profile))

    def action_index(self, player: int, label: str) -> int:
        try:
            return self.actions[player].index(label)
        except ValueError:
            raise UnknownActionError(
                f"player {self.players[player]!r} has no action {label!r}"
            ) from None

    def profile_of(self, labels: Sequence[str]) -> Profile:
        if len(labels) != self.n_players:
            raise ArityMismatchError(
                f"expected {self.n_players} action labels, got {len(labels)}"
            )
        return tuple(self.action_index(k, lab) for k, lab in enumerate(labels))

    def player_index(self, player: int | str) -> int:
        if isinstance(player, str):
            if player in self.players:
                return self.players.index(player)
            raise IndexOutOfRangeError(f"unknown player {player!r}")
        if not 0 <= player < self.n_players:
            raise IndexOutOfRangeError(f"player index {player} out of range")
        return player

    def check_profile(self, profile: Sequence[int]) -> Profile:
        profile = tuple(profile)
        if len(profile) != self.n_players:
            raise IndexOutOfRangeError(
                f"profile {profile} has {len(profile)} slots, game has {self.n_players} players"
            )
        for k, (a, size) in enumerate(zip(profile, self.shape)):
            if not 0 <= a < size:
                raise IndexOutOfRangeError(
                    f"action {a} out of range for player {self.players[k]!r}"
                )
        return profile


def build_game(
    name: str,
    players: Sequence[str],
    action_labels: Sequence[Sequence[str]],
    payoff_entries: Iterable[tuple[Sequence[int | str], Sequence[PayoffValue]]]
    | Mapping[Sequence[int | str], Sequence[PayoffValue]],
) -> StrategicGame:
    """Validate and assemble a game.

    Each payoff entry pairs a profile (action labels or indices) with the
    payoff vector of all players. Every profile must appear exactly once.
    """
    players = tuple(players)
    actions = tuple(tuple(labels) for labels in action_labels)
    n = len(players)
    if n < 1:
        raise GameError("a game needs at least one player")
    if len(actions) != n:
        raise ArityMismatchError(f"{n} players but {len(actions)} action sets")
    if len(set(players)) != n:
        raise GameError("player labels must be unique")
    for who, labels in zip(players, actions):
        if not labels:
            raise GameError(f"player {who!r} has no actions")
        if len(set(labels)) != len(labels):
            raise GameError(f"duplicate action label for player {who!r}")

    if isinstance(payoff_entries, Mapping):
        payoff_entries = payoff_entries.items()

    payoffs: dict[Profile, tuple[Fraction, ...]] = {}
    for raw_profile, raw_values in payoff_entries:
        raw_profile = tuple(raw_profile)
        if len(raw_profile) != n:
            raise ArityMismatchError(
                f"profile {raw_profile} has {len(raw_profile)} actions, expected {n}"
            )
        profile = []
        for k, a in enumerate(raw_profile):
            if isinstance(a, str):
                if a not in actions[k]:
                    raise UnknownActionError(f"player {players[k]!r} has no action {a!r}")
                profile.append(actions[k].index(a))
            elif isinstance(a, int) and 0 <= a < len(actions[k]):
                profile.append(a)
            else:
                raise UnknownActionError(f"player {players[k]!r} has no action {a!r}")
        key = tuple(profile)
        values = tuple(raw_values)
        if len(values) != n:
            raise ArityMismatchError(
                f"profile {raw_profile} has {len(values)} payoffs, expected {n}"
            )
        if key in payoffs:
            raise DuplicateProfileError(f"profile {raw_profile} given twice")
        payoffs[key] = tuple(_to_fraction(v) for v in values)

    expected = math.prod(len(a) for a in actions)
    if len(payoffs) != expected:
        missing = next(
            p for p in itertools.product(*(range(len(a)) for a in actions))
            if p not in payoffs
        )
        labels = tuple(actions[k][a] for k, a in enumerate(missing))
        raise MissingProfileError(f"no payoff given for profile {labels}")

    # re-key in lexicographic order so iteration over payoffs is deterministic
    ordered = {p: payoffs[p] for p in itertools.product(*(range(len(a)) for a in actions))}
    return StrategicGame(name=name, players=players, actions=actions, payoffs=ordered)


def payoff(game: StrategicGame, i: int, profile: Sequence[int]) -> Fraction:
    """Player ``i``'s payoff at ``profile``."""
    i = game.player_index(i)
    return game.payoffs[game.check_profile(profile)][i]


def others_payoff(
    game: StrategicGame,
    i: int,
    profile: Sequence[int],
    aggregator: Aggregator = Aggregator.SUM,
) -> Fraction:
    """The scalar payoff of everyone except player ``i`` at ``profile``."""
    i = game.player_index(i)
    if game.n_players < 2:
        raise GameError("others' payoff is undefined in a one-player game")
    return others_of(game.payoffs[game.check_profile(profile)], i, Aggregator(aggregator))


def others_of(vector: Sequence[Fraction], i: int, aggregator: Aggregator) -> Fraction:
    """Unchecked core of :func:`others_payoff` over a payoff vector."""
    if len(vector) == 2:
        return vector[1 - i]
    return aggregator.reduce([v for k, v in enumerate(vector) if k != i])


def enumerate_profiles(game: StrategicGame) -> list[Profile]:
    """All profiles, lexicographic in action indices."""
    return list(itertools.product(*(range(size) for size in game.shape)))


def iter_deviations(game: StrategicGame, partial: PartialProfile) -> Iterator[Profile]:
    for a in range(game.shape[partial.free]):
        yield partial.complete(a)
