"""Repeated play of a two-player game between orientation-typed agents.

Each round an agent conjectures that the opponent repeats its previous
action, then picks the lowest-indexed action among its hyper-rational
choices for that conjecture. In the first round the agent conjectures the
opponent action found in the top profile of its own preference ordering.
Optional trembles replace a chosen action by a uniformly drawn other one.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .errors import GameError, InvalidRoundsError, NotTwoPlayerError
from .game import Aggregator, PartialProfile, StrategicGame
from .solver import Orientation
from .taxonomy import (
    PreferenceOrder,
    choose_by_order,
    hyper_rational_choice,
    preference_order,
    two_principles_filter,
)


@dataclass(frozen=True)
class AgentPolicy:
    name: str
    orientation: Orientation
    principle_filter: bool = False
    # maps the opponent's last action to the conjectured next one
    response_rule: Callable[[int], int] | None = None
    aggregator: Aggregator = Aggregator.SUM

    def __post_init__(self) -> None:
        object.__setattr__(self, "orientation", Orientation(self.orientation))


BUILTIN_POLICIES = {
    "two-principles": AgentPolicy("two-principles", Orientation.COLLECTIVE_PROFIT, True),
    "two-principles-loss": AgentPolicy(
        "two-principles-loss", Orientation.COLLECTIVE_LOSS, True
    ),
    **{o.value: AgentPolicy(o.value, o) for o in Orientation},
}


def get_policy(name: str) -> AgentPolicy:
    try:
        return BUILTIN_POLICIES[name]
    except KeyError:
        raise GameError(
            f"unknown policy {name!r}; choose from {', '.join(sorted(BUILTIN_POLICIES))}"
        ) from None


@dataclass(frozen=True)
class NoiseSpec:
    epsilon: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")


@dataclass(frozen=True)
class MatchResult:
    game: StrategicGame = field(repr=False, compare=False)
    policies: tuple[str, str]
    history: tuple[tuple[int, int], ...]
    totals: tuple[Fraction, Fraction]
    cooperation_rate: tuple[float, float]

    @property
    def rounds(self) -> int:
        return len(self.history)

    @property
    def average(self) -> tuple[Fraction, Fraction]:
        return (self.totals[0] / self.rounds, self.totals[1] / self.rounds)

    def rows(self) -> list[tuple[int, str, str, Fraction, Fraction]]:
        """(round, actionA, actionB, payoffA, payoffB), rounds counted from 1."""
        out = []
        for t, joint in enumerate(self.history, start=1):
            a, b = self.game.labels(joint)
            pa, pb = self.game.payoffs[joint]
            out.append((t, a, b, pa, pb))
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["round", "actionA", "actionB", "payoffA", "payoffB"])
        for t, a, b, pa, pb in self.rows():
            writer.writerow([t, a, b, str(pa), str(pb)])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "game": self.game.name,
            "policies": list(self.policies),
            "rounds": self.rounds,
            "totals": [str(x) for x in self.totals],
            "average": [str(x) for x in self.average],
            "cooperation_rate": list(self.cooperation_rate),
            "history": [list(self.game.labels(j)) for j in self.history],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


class _Agent:
    """A policy bound to one seat of a specific game."""

    def __init__(self, game: StrategicGame, policy: AgentPolicy, seat: int):
        self.game = game
        self.policy = policy
        self.seat = seat
        self.opp = 1 - seat
        self.order: PreferenceOrder = preference_order(
            game, seat, policy.orientation, policy.aggregator
        )
        if policy.principle_filter:
            self.order = two_principles_filter(game, self.order)

    def opening_conjecture(self) -> int:
        return self.order.tiers[0][0][self.opp]

    def conjecture(self, last_opponent_action: int | None) -> int:
        if last_opponent_action is None:
            return self.opening_conjecture()
        if self.policy.response_rule is None:
            return last_opponent_action
        return self.policy.response_rule(last_opponent_action)

    def act(self, last_opponent_action: int | None) -> int:
        guess = self.conjecture(last_opponent_action)
        slots: list[int | None] = [None, None]
        slots[self.opp] = guess
        partial = PartialProfile(tuple(slots))
        if self.policy.principle_filter:
            options = choose_by_order(self.game, self.order, partial)
            if options:
                return min(options)
        options = hyper_rational_choice(
            self.game, self.seat, self.policy.orientation, partial, self.policy.aggregator
        )
        return min(options)


def _tremble(rng: random.Random, action: int, n_actions: int, epsilon: float) -> int:
    # both draws are always taken so the stream position depends only on the round
    flip = rng.random() < epsilon
    pick = rng.randrange(n_actions - 1) if n_actions > 1 else 0
    if not flip or n_actions == 1:
        return action
    return pick if pick < action else pick + 1


def play_repeated(
    game: StrategicGame,
    policy_a: AgentPolicy,
    policy_b: AgentPolicy,
    rounds: int,
    noise: NoiseSpec | None = None,
    *,
    cooperative: str | Sequence[str] | None = None,
    pair: tuple[int, int] = (0, 1),
) -> MatchResult:
    """Play ``rounds`` rounds; policy A takes the row seat.

    ``cooperative`` names the action counted towards each player's
    cooperation rate (one label for both, or one per player). Without it the
    first action of each player is used. ``pair`` keys the random stream so
    that tournament matches draw independent, schedule-free streams.
    """
    if game.n_players != 2:
        raise NotTwoPlayerError(f"repeated play needs 2 players, got {game.n_players}")
    if isinstance(rounds, bool) or not isinstance(rounds, int) or rounds < 1:
        raise InvalidRoundsError(f"rounds must be a positive integer, got {rounds!r}")
    noise = noise or NoiseSpec()

    if cooperative is None:
        coop = (0, 0)
    elif isinstance(cooperative, str):
        coop = (game.action_index(0, cooperative), game.action_index(1, cooperative))
    else:
        coop = (game.action_index(0, cooperative[0]), game.action_index(1, cooperative[1]))

    agents = (_Agent(game, policy_a, 0), _Agent(game, policy_b, 1))
    rng = random.Random(f"{noise.seed}/{pair[0]}/{pair[1]}")
    history: list[tuple[int, int]] = []
    last: tuple[int, int] | None = None
    for _ in range(rounds):
        a = agents[0].act(None if last is None else last[1])
        b = agents[1].act(None if last is None else last[0])
        if noise.epsilon > 0:
            a = _tremble(rng, a, game.shape[0], noise.epsilon)
            b = _tremble(rng, b, game.shape[1], noise.epsilon)
        last = (a, b)
        history.append(last)

    totals = (
        sum((game.payoffs[j][0] for j in history), Fraction(0)),
        sum((game.payoffs[j][1] for j in history), Fraction(0)),
    )
    rate = tuple(sum(1 for j in history if j[k] == coop[k]) / rounds for k in (0, 1))
    return MatchResult(
        game=game,
        policies=(policy_a.name, policy_b.name),
        history=tuple(history),
        totals=totals,
        cooperation_rate=rate,
    )


@dataclass(frozen=True)
class TournamentResult:
    names: tuple[str, ...]
    # scores[p][q]: p's average payoff per round against q
    scores: tuple[tuple[Fraction, ...], ...]

    def to_dict(self) -> dict:
        return {
            "policies": list(self.names),
            "scores": [[str(x) for x in row] for row in self.scores],
        }


def tournament(
    game: StrategicGame,
    policies: Sequence[AgentPolicy],
    rounds: int,
    noise: NoiseSpec | None = None,
) -> TournamentResult:
    """Round robin including self-play.

    Each unordered pair meets once with the lower-indexed policy in the row
    seat; both matrix entries come from that match.
    """
    if len(policies) < 2:
        raise GameError("a tournament needs at least two policies")
    n = len(policies)
    scores = [[Fraction(0)] * n for _ in range(n)]
    for p in range(n):
        for q in range(p, n):
            result = play_repeated(
                game, policies[p], policies[q], rounds, noise, pair=(p, q)
            )
            avg = result.average
            if p == q:
                # a policy playing itself occupies both seats
                scores[p][p] = (avg[0] + avg[1]) / 2
            else:
                scores[p][q] = avg[0]
                scores[q][p] = avg[1]
    return TournamentResult(
        names=tuple(pol.name for pol in policies),
        scores=tuple(tuple(row) for row in scores),
    )
