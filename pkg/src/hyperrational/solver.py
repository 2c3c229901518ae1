"""Best responses, dominance and equilibria under other-regarding orientations.

A player can rank her actions by her own payoff (profit, or loss when she
perversely minimises it), by the payoff of everyone else (profit for
others), or by how little everyone else gets (loss for others). Each
orientation yields a best-response correspondence; a profile where every
player's action lies in the same correspondence is an equilibrium of the
matching class:

* ``B`` - own-benefit best responses (textbook pure Nash),
* ``K`` - profit-for-others best responses,
* ``L`` - loss-for-others best responses.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import FreeSlotMismatchError, GameError, UnsupportedOrientationError
from .game import (
    Aggregator,
    PartialProfile,
    Profile,
    StrategicGame,
    enumerate_profiles,
    iter_deviations,
    others_of,
    others_payoff,
    payoff,
)


class Orientation(str, enum.Enum):
    INDIVIDUAL_PROFIT = "individual-profit"
    INDIVIDUAL_LOSS = "individual-loss"
    PROFIT_OTHERS = "profit-others"
    LOSS_OTHERS = "loss-others"
    COLLECTIVE_PROFIT = "collective-profit"
    COLLECTIVE_LOSS = "collective-loss"

    @property
    def is_collective(self) -> bool:
        return self in (Orientation.COLLECTIVE_PROFIT, Orientation.COLLECTIVE_LOSS)

    @property
    def maximises(self) -> bool:
        """True for profit-type orientations (bigger key is better)."""
        return self in (
            Orientation.INDIVIDUAL_PROFIT,
            Orientation.PROFIT_OTHERS,
            Orientation.COLLECTIVE_PROFIT,
        )


PLAYER_ORIENTATIONS = (
    Orientation.INDIVIDUAL_PROFIT,
    Orientation.INDIVIDUAL_LOSS,
    Orientation.PROFIT_OTHERS,
    Orientation.LOSS_OTHERS,
)


class EquilibriumClass(str, enum.Enum):
    B = "B"
    K = "K"
    L = "L"


HYPER_MODES = ("strict", "annotated")


def _objective(
    game: StrategicGame, i: int, orientation: Orientation, aggregator: Aggregator
) -> Callable[[Profile], Fraction]:
    """Score of a profile for player i, oriented so that larger is better.

    Profiles are assumed valid; callers check them first.
    """
    orientation = Orientation(orientation)
    table = game.payoffs
    if orientation is Orientation.INDIVIDUAL_PROFIT:
        return lambda p: table[p][i]
    if orientation is Orientation.INDIVIDUAL_LOSS:
        return lambda p: -table[p][i]
    if game.n_players < 2:
        raise GameError("others' payoff is undefined in a one-player game")
    aggregator = Aggregator(aggregator)
    if orientation is Orientation.PROFIT_OTHERS:
        return lambda p: others_of(table[p], i, aggregator)
    if orientation is Orientation.LOSS_OTHERS:
        return lambda p: -others_of(table[p], i, aggregator)
    raise UnsupportedOrientationError(
        f"{orientation.value} is not a single-player orientation"
    )


def _check_partial(game: StrategicGame, i: int, partial: PartialProfile) -> int:
    i = game.player_index(i)
    if len(partial.choices) != game.n_players or partial.free != i:
        raise FreeSlotMismatchError(
            f"partial profile {partial.choices} does not leave player {i} free"
        )
    game.check_profile(partial.complete(0))
    return i


def best_response(
    game: StrategicGame,
    i: int,
    partial: PartialProfile,
    orientation: Orientation,
    aggregator: Aggregator = Aggregator.SUM,
) -> frozenset[int]:
    """Actions of player ``i`` that are optimal under ``orientation``. Ties are kept."""
    i = _check_partial(game, i, partial)
    score = _objective(game, i, orientation, aggregator)
    values = {p[i]: score(p) for p in iter_deviations(game, partial)}
    top = max(values.values())
    return frozenset(a for a, v in values.items() if v == top)


def best_response_individual(
    game: StrategicGame, i: int, partial: PartialProfile
) -> frozenset[int]:
    return best_response(game, i, partial, Orientation.INDIVIDUAL_PROFIT)


def best_response_profit_others(
    game: StrategicGame,
    i: int,
    partial: PartialProfile,
    aggregator: Aggregator = Aggregator.SUM,
) -> frozenset[int]:
    return best_response(game, i, partial, Orientation.PROFIT_OTHERS, aggregator)


def best_response_loss_others(
    game: StrategicGame,
    i: int,
    partial: PartialProfile,
    aggregator: Aggregator = Aggregator.SUM,
) -> frozenset[int]:
    return best_response(game, i, partial, Orientation.LOSS_OTHERS, aggregator)


# -- dominance ---------------------------------------------------------------


@dataclass(frozen=True)
class PlayerDominance:
    strictly_dominant: tuple[int, ...] = ()
    weakly_dominant: tuple[int, ...] = ()
    strictly_dominated: tuple[int, ...] = ()
    weakly_dominated: tuple[int, ...] = ()


@dataclass(frozen=True)
class DominanceReport:
    orientation: Orientation
    players: tuple[PlayerDominance, ...]

    def __getitem__(self, i: int) -> PlayerDominance:
        return self.players[i]


def _opponent_contexts(game: StrategicGame, i: int) -> list[PartialProfile]:
    return [
        PartialProfile.around(p, i) for p in enumerate_profiles(game) if p[i] == 0
    ]


def dominance(
    game: StrategicGame,
    orientation: Orientation,
    aggregator: Aggregator = Aggregator.SUM,
) -> DominanceReport:
    """Classify every action of every player as dominant/dominated.

    ``x`` strictly dominates ``y`` when it scores better against every
    choice of the other players; weakly when it never scores worse and
    scores better against at least one. A dominant action dominates every
    other action of the player, a dominated one is dominated by some other
    action. Players with a single action have neither.
    """
    orientation = Orientation(orientation)
    if orientation not in PLAYER_ORIENTATIONS:
        raise UnsupportedOrientationError(
            f"dominance is not defined for {orientation.value}"
        )
    reports = []
    for i in range(game.n_players):
        score = _objective(game, i, orientation, aggregator)
        contexts = _opponent_contexts(game, i)
        # rows[a] lists the score of action a against each context
        rows = [[score(c.complete(a)) for c in contexts] for a in range(game.shape[i])]

        def strictly(x: int, y: int) -> bool:
            return all(u > v for u, v in zip(rows[x], rows[y]))

        def weakly(x: int, y: int) -> bool:
            return all(u >= v for u, v in zip(rows[x], rows[y])) and any(
                u > v for u, v in zip(rows[x], rows[y])
            )

        acts = range(game.shape[i])
        reports.append(
            PlayerDominance(
                strictly_dominant=tuple(
                    x for x in acts
                    if len(acts) > 1 and all(strictly(x, y) for y in acts if y != x)
                ),
                weakly_dominant=tuple(
                    x for x in acts
                    if len(acts) > 1 and all(weakly(x, y) for y in acts if y != x)
                ),
                strictly_dominated=tuple(
                    y for y in acts if any(strictly(x, y) for x in acts if x != y)
                ),
                weakly_dominated=tuple(
                    y for y in acts if any(weakly(x, y) for x in acts if x != y)
                ),
            )
        )
    return DominanceReport(orientation, tuple(reports))


# -- equilibria --------------------------------------------------------------

_CLASS_ORIENTATION = {
    EquilibriumClass.B: Orientation.INDIVIDUAL_PROFIT,
    EquilibriumClass.K: Orientation.PROFIT_OTHERS,
    EquilibriumClass.L: Orientation.LOSS_OTHERS,
}


@dataclass(frozen=True)
class EquilibriumEntry:
    profile: Profile
    classes: frozenset[EquilibriumClass]
    strict_hyper: bool
    # None unless the profile is an annotated hyper-equilibrium
    pivots: tuple[int, ...] | None = None

    @property
    def annotated_hyper(self) -> bool:
        return self.pivots is not None


@dataclass(frozen=True)
class EquilibriumReport:
    """Every profile belonging to at least one class, in lexicographic order."""

    entries: tuple[EquilibriumEntry, ...]

    def profiles(self) -> list[Profile]:
        return [e.profile for e in self.entries]

    def of_class(self, cls: EquilibriumClass) -> list[Profile]:
        cls = EquilibriumClass(cls)
        return [e.profile for e in self.entries if cls in e.classes]

    def classes_of(self, profile: Sequence[int]) -> frozenset[EquilibriumClass]:
        profile = tuple(profile)
        for e in self.entries:
            if e.profile == profile:
                return e.classes
        return frozenset()

    def __len__(self) -> int:
        return len(self.entries)


def equilibrium_classes(
    game: StrategicGame, profile: Sequence[int], aggregator: Aggregator = Aggregator.SUM
) -> frozenset[EquilibriumClass]:
    profile = game.check_profile(profile)
    found = set()
    for cls, orientation in _CLASS_ORIENTATION.items():
        if all(
            profile[i]
            in best_response(
                game, i, PartialProfile.around(profile, i), orientation, aggregator
            )
            for i in range(game.n_players)
        ):
            found.add(cls)
    return frozenset(found)


def _stable_own_payoff(game: StrategicGame, profile: Profile) -> bool:
    """No player gains own payoff by a unilateral deviation."""
    for i in range(game.n_players):
        here = payoff(game, i, profile)
        for q in iter_deviations(game, PartialProfile.around(profile, i)):
            if payoff(game, i, q) > here:
                return False
    return True


def pivot_players(
    game: StrategicGame, profile: Sequence[int], aggregator: Aggregator = Aggregator.SUM
) -> tuple[int, ...]:
    """Players with a deviation that costs them nothing but moves everyone else's payoff."""
    profile = game.check_profile(profile)
    pivots = []
    for i in range(game.n_players):
        own = payoff(game, i, profile)
        rest = others_payoff(game, i, profile, aggregator)
        for q in iter_deviations(game, PartialProfile.around(profile, i)):
            if q == profile:
                continue
            if payoff(game, i, q) == own and others_payoff(game, i, q, aggregator) != rest:
                pivots.append(i)
                break
    return tuple(pivots)


def _is_annotated_hyper(
    game: StrategicGame,
    profile: Profile,
    classes: frozenset[EquilibriumClass],
    aggregator: Aggregator,
) -> tuple[int, ...] | None:
    if not classes & {EquilibriumClass.K, EquilibriumClass.L}:
        return None
    if not _stable_own_payoff(game, profile):
        return None
    pivots = pivot_players(game, profile, aggregator)
    return pivots or None


def equilibria(
    game: StrategicGame, aggregator: Aggregator = Aggregator.SUM
) -> EquilibriumReport:
    """Tag every profile with its equilibrium classes and hyper-equilibrium status."""
    aggregator = Aggregator(aggregator)
    entries = []
    for profile in enumerate_profiles(game):
        classes = equilibrium_classes(game, profile, aggregator)
        if not classes:
            continue
        strict = bool(classes & {EquilibriumClass.K, EquilibriumClass.L})
        entries.append(
            EquilibriumEntry(
                profile=profile,
                classes=classes,
                strict_hyper=strict,
                pivots=_is_annotated_hyper(game, profile, classes, aggregator),
            )
        )
    return EquilibriumReport(tuple(entries))


@dataclass(frozen=True)
class HyperEquilibrium:
    profile: Profile
    pivots: tuple[int, ...]
    mode: str


def hyper_equilibria(
    game: StrategicGame,
    mode: str = "annotated",
    aggregator: Aggregator = Aggregator.SUM,
) -> list[HyperEquilibrium]:
    """Hyper-equilibria in one of two readings.

    ``strict``: every K- or L-class equilibrium. ``annotated``: those of
    them where no player can raise her own payoff by deviating and at least
    one pivot player can change the others' payoff at no cost to herself.
    Pivots are reported in both modes (possibly empty in strict mode).
    """
    if mode not in HYPER_MODES:
        raise ValueError(f"mode must be one of {HYPER_MODES}, got {mode!r}")
    found = []
    for entry in equilibria(game, aggregator).entries:
        if not entry.strict_hyper:
            continue
        if mode == "annotated":
            if entry.pivots is not None:
                found.append(HyperEquilibrium(entry.profile, entry.pivots, mode))
        else:
            pivots = pivot_players(game, entry.profile, aggregator)
            found.append(HyperEquilibrium(entry.profile, pivots, mode))
    return found


# -- independent oracle ------------------------------------------------------


def oracle_check(
    game: StrategicGame,
    profile: Sequence[int],
    cls: EquilibriumClass,
    aggregator: Aggregator = Aggregator.SUM,
) -> bool:
    """Check class membership straight from the quantified definition.

    Reads the payoff table directly; none of the best-response machinery
    above is involved, so this can serve as a test oracle for it.
    """
    cls = EquilibriumClass(cls)
    agg = {"sum": sum, "min": min, "max": max}[Aggregator(aggregator).value]
    star = tuple(profile)
    n = len(game.players)

    def others(p: tuple[int, ...], i: int) -> Fraction:
        vals = [game.payoffs[p][j] for j in range(n) if j != i]
        return vals[0] if len(vals) == 1 else agg(vals)

    for i in range(n):
        for alt in range(len(game.actions[i])):
            dev = star[:i] + (alt,) + star[i + 1:]
            if cls is EquilibriumClass.B:
                ok = game.payoffs[star][i] >= game.payoffs[dev][i]
            elif cls is EquilibriumClass.K:
                ok = others(star, i) >= others(dev, i)
            else:
                ok = others(star, i) <= others(dev, i)
            if not ok:
                return False
    return True
