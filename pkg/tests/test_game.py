import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given

from helpers import make_game, small_games
from hyperrational import (
    Aggregator,
    ArityMismatchError,
    DuplicateProfileError,
    GameError,
    IndexOutOfRangeError,
    MissingProfileError,
    PartialProfile,
    build_game,
    enumerate_profiles,
    others_payoff,
    payoff,
)
from hyperrational.errors import FreeSlotMismatchError, UnknownActionError

PD_ENTRIES = {("C", "C"): (3, 3), ("C", "D"): (1, 4), ("D", "C"): (4, 1), ("D", "D"): (2, 2)}


def three_player():
    # payoffs at profile (0, 0, 0) are (1, 2, 5); everything else is zero
    values = [0] * 24
    values[:3] = [1, 2, 5]
    return make_game((2, 2, 2), values, name="three")


def test_build_pd():
    game = build_game("pd", ["row", "col"], [["C", "D"], ["C", "D"]], PD_ENTRIES)
    assert game.shape == (2, 2)
    assert len(game.payoffs) == 4
    assert game.payoffs[(1, 0)] == (4, 1)


def test_degenerate_single_player_game():
    game = build_game("solo", ["only"], [["x"]], [(("x",), (0,))])
    assert enumerate_profiles(game) == [(0,)]
    assert payoff(game, 0, (0,)) == 0


def test_missing_profile():
    entries = dict(PD_ENTRIES)
    del entries[("D", "D")]
    with pytest.raises(MissingProfileError, match="D', 'D"):
        build_game("pd", ["r", "c"], [["C", "D"], ["C", "D"]], entries)


def test_duplicate_profile():
    entries = list(PD_ENTRIES.items()) + [((1, 1), (0, 0))]
    with pytest.raises(DuplicateProfileError):
        build_game("pd", ["r", "c"], [["C", "D"], ["C", "D"]], entries)


@pytest.mark.parametrize(
    "entry",
    [(("C",), (1, 1)), (("C", "C", "C"), (1, 1)), (("C", "C"), (1,)), (("C", "C"), (1, 2, 3))],
)
def test_arity_mismatch(entry):
    with pytest.raises(ArityMismatchError):
        build_game("pd", ["r", "c"], [["C", "D"], ["C", "D"]], [entry])


def test_unknown_action_and_bad_labels():
    with pytest.raises(UnknownActionError):
        build_game("pd", ["r", "c"], [["C", "D"], ["C", "D"]], [(("C", "X"), (1, 1))])
    with pytest.raises(GameError, match="duplicate action"):
        build_game("pd", ["r", "c"], [["C", "C"], ["C", "D"]], PD_ENTRIES)


def test_float_payoffs_rejected():
    entries = dict(PD_ENTRIES)
    entries[("C", "C")] = (0.5, 3)
    with pytest.raises(GameError, match="payoff must be"):
        build_game("pd", ["r", "c"], [["C", "D"], ["C", "D"]], entries)


def test_rational_strings_are_exact():
    entries = dict(PD_ENTRIES)
    entries[("C", "C")] = ("1/3", Fraction(2, 3))
    game = build_game("pd", ["r", "c"], [["C", "D"], ["C", "D"]], entries)
    assert payoff(game, 0, (0, 0)) + payoff(game, 1, (0, 0)) == 1


def test_payoff_catalog_values(g1, g2):
    assert payoff(g1, 0, g1.profile_of(["D", "C"])) == 4
    assert payoff(g2, 1, g2.profile_of(["A", "M"])) == 1
    assert payoff(g2, "USSR", g2.profile_of(["A", "M"])) == 1


def test_payoff_deterministic(g3):
    assert [payoff(g3, 1, (0, 1)) for _ in range(5)] == [4] * 5


@pytest.mark.parametrize("i, profile", [(2, (0, 0)), (-1, (0, 0)), (0, (2, 0)), (0, (0,))])
def test_payoff_out_of_range(g1, i, profile):
    with pytest.raises(IndexOutOfRangeError):
        payoff(g1, i, profile)


@pytest.mark.parametrize("agg", list(Aggregator))
def test_others_payoff_two_players(g1, agg):
    assert others_payoff(g1, 0, g1.profile_of(["D", "C"]), agg) == 1


def test_others_payoff_three_players():
    game = three_player()
    assert others_payoff(game, 0, (0, 0, 0), Aggregator.SUM) == 7
    assert others_payoff(game, 0, (0, 0, 0), Aggregator.MIN) == 2
    assert others_payoff(game, 0, (0, 0, 0), Aggregator.MAX) == 5
    assert others_payoff(game, 2, (0, 0, 0)) == 3


def test_others_payoff_needs_two_players():
    game = build_game("solo", ["only"], [["x"]], [(("x",), (0,))])
    with pytest.raises(GameError):
        others_payoff(game, 0, (0,))


def test_enumerate_order():
    game = make_game((2, 2), [0] * 8)
    assert enumerate_profiles(game) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(enumerate_profiles(make_game((2, 3), [0] * 12))) == 6
    assert len(enumerate_profiles(make_game((2, 2, 2), [0] * 24))) == 8


def test_partial_profile():
    partial = PartialProfile.around((1, 0, 1), 1)
    assert partial.free == 1
    assert partial.complete(1) == (1, 1, 1)
    with pytest.raises(FreeSlotMismatchError):
        PartialProfile((0, 1))
    with pytest.raises(FreeSlotMismatchError):
        PartialProfile((None, None))


def test_game_is_immutable(g1):
    with pytest.raises(AttributeError):
        g1.name = "other"


@given(small_games())
def test_round_trip_and_enumeration(game):
    profiles = enumerate_profiles(game)
    assert len(profiles) == math.prod(game.shape) == len(set(profiles))
    assert profiles == sorted(profiles)
    entries = {game.labels(p): game.payoffs[p] for p in profiles}
    rebuilt = build_game(game.name, game.players, game.actions, entries)
    for p in profiles:
        for i in range(game.n_players):
            assert payoff(rebuilt, i, p) == payoff(game, i, p)


@given(small_games())
def test_others_sum_plus_own_is_total(game):
    for p, i in itertools.product(enumerate_profiles(game), range(game.n_players)):
        total = sum(game.payoffs[p])
        assert others_payoff(game, i, p, Aggregator.SUM) + payoff(game, i, p) == total


@given(small_games(max_players=2))
def test_two_player_aggregators_agree(game):
    for p, i in itertools.product(enumerate_profiles(game), range(2)):
        values = {others_payoff(game, i, p, agg) for agg in Aggregator}
        assert len(values) == 1
