"""Game analysis with other-regarding (hyper-rational) preferences."""

from .catalog import catalog, get_game
from .errors import (
    ArityMismatchError,
    AsymmetricActionSetsError,
    DuplicateProfileError,
    FreeSlotMismatchError,
    GameError,
    GameSyntaxError,
    IndexOutOfRangeError,
    InvalidRoundsError,
    MissingProfileError,
    NotTwoPlayerError,
    UnknownActionError,
    UnsupportedOrientationError,
)
from .game import (
    Aggregator,
    PartialProfile,
    Profile,
    StrategicGame,
    build_game,
    enumerate_profiles,
    others_payoff,
    payoff,
)
from .gamefile import parse_game, serialize_game
from .repeated import (
    AgentPolicy,
    MatchResult,
    NoiseSpec,
    TournamentResult,
    play_repeated,
    tournament,
)
from .solver import (
    DominanceReport,
    EquilibriumClass,
    EquilibriumReport,
    HyperEquilibrium,
    Orientation,
    best_response_individual,
    best_response_loss_others,
    best_response_profit_others,
    dominance,
    equilibria,
    hyper_equilibria,
    oracle_check,
)
from .taxonomy import (
    PreferenceOrder,
    Relation,
    check_complete,
    check_transitive,
    hyper_rational_choice,
    preference_order,
    two_principles_filter,
)
