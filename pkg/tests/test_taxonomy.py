import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import make_game, small_games
from hyperrational import (
    Orientation,
    PartialProfile,
    Relation,
    check_complete,
    check_transitive,
    enumerate_profiles,
    hyper_rational_choice,
    preference_order,
    two_principles_filter,
)
from hyperrational.errors import (
    AsymmetricActionSetsError,
    FreeSlotMismatchError,
    UnsupportedOrientationError,
)
from hyperrational.solver import best_response


def chain(game, order):
    """Tiers as nested label tuples, e.g. ((("C","C"),), (("D","D"),))."""
    return [sorted(game.labels(p) for p in tier) for tier in order.tiers]


def parse_chain(text):
    """'DC > CC > {CD, DC}' style shorthand for 2x2 games."""
    tiers = []
    for part in text.split(">"):
        items = part.strip().strip("{}").split(",")
        tiers.append(sorted(tuple(item.strip()) for item in items))
    return tiers


@pytest.mark.parametrize(
    "orientation, expected",
    [
        ("individual-profit", "DC > CC > DD > CD"),
        ("individual-loss", "CD > DD > CC > DC"),
        ("profit-others", "CD > CC > DD > DC"),
        ("loss-others", "DC > DD > CC > CD"),
    ],
)
def test_pd_row_orders(g1, orientation, expected):
    assert chain(g1, preference_order(g1, 0, orientation)) == parse_chain(expected)


@pytest.mark.parametrize("player", [0, 1])
def test_pd_collective_orders(g1, player):
    assert chain(g1, preference_order(g1, player, "collective-profit")) == parse_chain(
        "CC > DD > {CD, DC}"
    )
    assert chain(g1, preference_order(g1, player, "collective-loss")) == parse_chain(
        "DD > CC > {CD, DC}"
    )


@pytest.mark.parametrize("player", [0, 1])
def test_missile_crisis_collective_profit(g2, player):
    assert chain(g2, preference_order(g2, player, "collective-profit")) == parse_chain(
        "BW > AW > {AM, BM}"
    )


def test_trickery_row_loss_order(g3):
    # (D,C) and (D,D) both leave player 2 with 1
    assert chain(g3, preference_order(g3, 0, "loss-others")) == parse_chain(
        "{DC, DD} > CC > CD"
    )


def test_orders_carry_owner_and_orientation(g1):
    order = preference_order(g1, 1, Orientation.LOSS_OTHERS)
    assert order.owner == 1 and order.orientation is Orientation.LOSS_OTHERS
    assert order.rank((1, 0)) == 3 and order.prefers((0, 1), (1, 0))


# -- relation checks -------------------------------------------------------------


def test_complete_from_order(g2):
    assert check_complete(preference_order(g2, 0, "individual-profit").to_relation()) == (True, None)


def test_incomplete_relations():
    assert check_complete(Relation.of(["x", "y"], [])) == (False, ("x", "y"))
    ok, missing = check_complete(Relation.of(["x", "y", "z"], [("x", "y")]))
    assert not ok and missing == ("x", "z")


def test_cycle_is_not_transitive():
    rel = Relation.of("ABC", [("A", "B"), ("B", "C"), ("C", "A")])
    violations = check_transitive(rel)
    assert ("A", "B", "C") in violations
    assert len(violations) == 3


def test_transitive_cases(g3):
    assert check_transitive(preference_order(g3, 1, "collective-loss").to_relation()) == []
    assert check_transitive(Relation.of([], [])) == []


def test_relation_rejects_stray_pairs():
    with pytest.raises(ValueError):
        Relation.of(["x"], [("x", "y")])


@given(small_games(), st.sampled_from(list(Orientation)), st.integers(0, 2))
def test_orders_are_total_preorders(game, orientation, who):
    i = who % game.n_players
    order = preference_order(game, i, orientation)
    assert sorted(order.domain) == enumerate_profiles(game)
    rel = order.to_relation()
    assert check_complete(rel) == (True, None)
    assert check_transitive(rel) == []


@given(small_games(), st.integers(0, 2))
def test_loss_orders_reverse_profit_orders(game, who):
    i = who % game.n_players
    assert preference_order(game, i, "individual-loss").tiers == (
        preference_order(game, i, "individual-profit").reversed().tiers
    )
    assert preference_order(game, i, "loss-others").tiers == (
        preference_order(game, i, "profit-others").reversed().tiers
    )


@given(small_games(), st.integers(0, 2))
def test_top_reachable_tier_matches_best_response(game, who):
    i = who % game.n_players
    for orientation in ("individual-profit", "profit-others", "loss-others", "individual-loss"):
        order = preference_order(game, i, orientation)
        for p in enumerate_profiles(game):
            if p[i]:
                continue
            partial = PartialProfile.around(p, i)
            completions = {partial.complete(a) for a in range(game.shape[i])}
            best = min(order.rank(q) for q in completions)
            top = {q[i] for q in order.tiers[best] if q in completions}
            assert top == best_response(game, i, partial, orientation)


# -- choice --------------------------------------------------------------------


def test_choice_examples(g1, g3):
    assert hyper_rational_choice(g1, 0, "profit-others", PartialProfile((None, 1))) == {0}
    assert hyper_rational_choice(g3, 0, "loss-others", PartialProfile((None, 1))) == {1}
    assert hyper_rational_choice(g1, 0, "collective-profit", PartialProfile((None, 0))) == {0}
    # individual loss is the own-payoff minimiser
    assert hyper_rational_choice(g1, 0, "individual-loss", PartialProfile((None, 0))) == {0}


def test_choice_errors(g1):
    with pytest.raises(FreeSlotMismatchError):
        hyper_rational_choice(g1, 1, "profit-others", PartialProfile((None, 1)))
    with pytest.raises(UnsupportedOrientationError):
        hyper_rational_choice(g1, 0, "altruism", PartialProfile((None, 1)))


# -- two principles --------------------------------------------------------------


def test_two_principles_pd(g1):
    profit = two_principles_filter(g1, preference_order(g1, 0, "collective-profit"))
    assert chain(g1, profit) == parse_chain("CC > DD")
    loss = two_principles_filter(g1, preference_order(g1, 0, "collective-loss"))
    assert chain(g1, loss) == parse_chain("DD > CC")


def test_two_principles_single_action():
    game = make_game((1, 1), [2, 5])
    order = preference_order(game, 0, "collective-profit")
    assert two_principles_filter(game, order) == order


def test_two_principles_needs_shared_labels(g2):
    with pytest.raises(AsymmetricActionSetsError):
        two_principles_filter(g2, preference_order(g2, 0, "collective-profit"))
