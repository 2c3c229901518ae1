"""Preference orderings over action profiles and relation checks.

An ordering is stored as tiers: profiles in an earlier tier are strictly
preferred to those in later ones, profiles in the same tier are
indifferent. The collective orientations rank by the worst-off player's
payoff (collective profit, higher is better) and by the best-off player's
payoff (collective loss, lower is better).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import groupby
from typing import Hashable, Iterable, Sequence

from .errors import AsymmetricActionSetsError, UnsupportedOrientationError
from .game import (
    Aggregator,
    PartialProfile,
    Profile,
    StrategicGame,
    enumerate_profiles,
    iter_deviations,
)
from .solver import Orientation, _check_partial, _objective, best_response


@dataclass(frozen=True)
class PreferenceOrder:
    owner: int
    orientation: Orientation
    tiers: tuple[tuple[Profile, ...], ...]

    @property
    def domain(self) -> list[Profile]:
        return [p for tier in self.tiers for p in tier]

    @cached_property
    def _ranks(self) -> dict[Profile, int]:
        return {p: k for k, tier in enumerate(self.tiers) for p in tier}

    def rank(self, profile: Sequence[int]) -> int | None:
        """Tier index of ``profile`` (0 is best), or None if not ranked."""
        return self._ranks.get(tuple(profile))

    def prefers(self, a: Sequence[int], b: Sequence[int]) -> bool:
        """Weak preference: ``a`` is at least as good as ``b``."""
        ra, rb = self.rank(a), self.rank(b)
        return ra is not None and rb is not None and ra <= rb

    def reversed(self) -> PreferenceOrder:
        return PreferenceOrder(self.owner, self.orientation, self.tiers[::-1])

    def to_relation(self) -> Relation:
        ranks = self._ranks
        return Relation(
            frozenset(ranks),
            frozenset((a, b) for a in ranks for b in ranks if ranks[a] <= ranks[b]),
        )


@dataclass(frozen=True)
class Relation:
    """A binary relation; ``(x, y)`` in ``pairs`` means x is weakly preferred to y."""

    domain: frozenset
    pairs: frozenset

    def __post_init__(self) -> None:
        stray = {x for pair in self.pairs for x in pair} - self.domain
        if stray:
            raise ValueError(f"pairs reference elements outside the domain: {stray}")

    @classmethod
    def of(cls, domain: Iterable[Hashable], pairs: Iterable[tuple]) -> Relation:
        return cls(frozenset(domain), frozenset(pairs))


def _sorted(items: Iterable) -> list:
    items = list(items)
    try:
        return sorted(items)
    except TypeError:
        return sorted(items, key=repr)


def check_complete(relation: Relation) -> tuple[bool, tuple | None]:
    """Whether every two elements are comparable; also the first pair that is not."""
    dom = _sorted(relation.domain)
    for k, x in enumerate(dom):
        for y in dom[k + 1:]:
            if (x, y) not in relation.pairs and (y, x) not in relation.pairs:
                return False, (x, y)
    return True, None


def check_transitive(relation: Relation) -> list[tuple]:
    """All triples (a, b, c) with a >= b and b >= c but not a >= c."""
    after: dict = {}
    for x, y in relation.pairs:
        after.setdefault(x, set()).add(y)
    violations = []
    for a in _sorted(after):
        for b in _sorted(after[a]):
            missing = after.get(b, set()) - after[a]
            violations.extend((a, b, c) for c in _sorted(missing))
    return violations


def _key(
    game: StrategicGame, i: int, orientation: Orientation, aggregator: Aggregator
):
    """Profile score where higher always means more preferred."""
    if orientation is Orientation.COLLECTIVE_PROFIT:
        return lambda p: min(game.payoffs[p])
    if orientation is Orientation.COLLECTIVE_LOSS:
        return lambda p: -max(game.payoffs[p])
    return _objective(game, i, orientation, aggregator)


def preference_order(
    game: StrategicGame,
    i: int,
    orientation: Orientation,
    aggregator: Aggregator = Aggregator.SUM,
) -> PreferenceOrder:
    """Rank all profiles for player ``i``; equal keys share a tier."""
    i = game.player_index(i)
    orientation = Orientation(orientation)
    key = _key(game, i, orientation, Aggregator(aggregator))
    scored: list[tuple[Fraction, Profile]] = [(key(p), p) for p in enumerate_profiles(game)]
    # stable sort keeps lexicographic order inside a tier
    scored.sort(key=lambda sp: sp[0], reverse=True)
    tiers = tuple(
        tuple(p for _, p in group) for _, group in groupby(scored, key=lambda sp: sp[0])
    )
    return PreferenceOrder(i, orientation, tiers)


def choose_by_order(
    game: StrategicGame, order: PreferenceOrder, conjecture: PartialProfile
) -> frozenset[int]:
    """Actions whose completed profile sits in the best tier reachable under the conjecture.

    Completions the order does not rank (e.g. removed by a filter) are
    ignored; if none is ranked the result is empty.
    """
    ranked = {}
    for q in iter_deviations(game, conjecture):
        r = order.rank(q)
        if r is not None:
            ranked[q[conjecture.free]] = r
    if not ranked:
        return frozenset()
    best = min(ranked.values())
    return frozenset(a for a, r in ranked.items() if r == best)


def hyper_rational_choice(
    game: StrategicGame,
    i: int,
    orientation: Orientation,
    conjecture: PartialProfile,
    aggregator: Aggregator = Aggregator.SUM,
) -> frozenset[int]:
    """What player ``i`` picks given a belief about the others' actions."""
    i = _check_partial(game, i, conjecture)
    try:
        orientation = Orientation(orientation)
    except ValueError:
        raise UnsupportedOrientationError(f"unknown orientation {orientation!r}") from None
    if orientation.is_collective:
        order = preference_order(game, i, orientation, aggregator)
        return choose_by_order(game, order, conjecture)
    return best_response(game, i, conjecture, orientation, aggregator)


def is_symmetric_labelled(game: StrategicGame) -> bool:
    first = set(game.actions[0])
    return all(set(labels) == first for labels in game.actions[1:])


def two_principles_filter(game: StrategicGame, order: PreferenceOrder) -> PreferenceOrder:
    """Keep only profiles where every player picks the same action label.

    Tier order among the survivors is preserved; emptied tiers are dropped.
    """
    if not is_symmetric_labelled(game):
        raise AsymmetricActionSetsError(
            "players must share the same action labels to compare like with like"
        )
    tiers = []
    for tier in order.tiers:
        kept = tuple(p for p in tier if len(set(game.labels(p))) == 1)
        if kept:
            tiers.append(kept)
    return PreferenceOrder(order.owner, order.orientation, tuple(tiers))
