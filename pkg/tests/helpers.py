"""Game generators and brute-force oracles shared by the tests.

Nothing here calls into the solver; the point is to check it against
independent code.
"""

import itertools
import random
from fractions import Fraction

from hypothesis import strategies as st

from hyperrational import build_game


def make_game(shape, values, name="random"):
    """Build a game from a flat list of payoffs (profile-major, player-minor)."""
    n = len(shape)
    players = [f"P{k + 1}" for k in range(n)]
    actions = [[f"a{j}" for j in range(size)] for size in shape]
    profiles = list(itertools.product(*(range(s) for s in shape)))
    entries = {p: values[k * n:(k + 1) * n] for k, p in enumerate(profiles)}
    return build_game(name, players, actions, entries)


@st.composite
def small_games(draw, min_players=2, max_players=3, min_actions=2, max_actions=4, high=4):
    n = draw(st.integers(min_players, max_players))
    shape = tuple(draw(st.integers(min_actions, max_actions)) for _ in range(n))
    count = n * len(list(itertools.product(*(range(s) for s in shape))))
    values = draw(st.lists(st.integers(0, high), min_size=count, max_size=count))
    return make_game(shape, values)


def random_games(count, seed=0, high=4):
    """``count`` games with 2-3 players, 2-4 actions each, payoffs in [0, high]."""
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(2, 3)
        shape = tuple(rng.randint(2, 4) for _ in range(n))
        size = 1
        for s in shape:
            size *= s
        yield make_game(shape, [rng.randint(0, high) for _ in range(size * n)], f"r{k}")


def textbook_nash(game):
    """Pure Nash equilibria by direct enumeration over raw payoff tuples."""
    out = []
    for prof, vec in game.payoffs.items():
        stable = True
        for i, size in enumerate(game.shape):
            for alt in range(size):
                dev = list(prof)
                dev[i] = alt
                if game.payoffs[tuple(dev)][i] > vec[i]:
                    stable = False
        if stable:
            out.append(prof)
    return sorted(out)


def others_sum(game, i, prof):
    return sum((v for j, v in enumerate(game.payoffs[prof]) if j != i), Fraction(0))
