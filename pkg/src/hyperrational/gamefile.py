"""Plain-text game files.

Example::

    # the prisoner's dilemma
    game "Prisoner's dilemma"
    players 2
    actions P1: C D
    actions P2: C D
    payoffs
    C C : 3 3
    C D : 1 4
    D C : 4 1
    D D : 2 2

Blank lines and lines starting with ``#`` are ignored. The name is a
double-quoted string with JSON escapes. Player labels before the colon on
``actions`` lines are free-form tokens (``P1``, ``P2``, ... by convention).
Payoff lines may come in any order; payoffs are integers or ``p/q``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import (
    ArityMismatchError,
    DuplicateProfileError,
    GameError,
    GameSyntaxError,
    MissingProfileError,
    UnknownActionError,
)
from .game import StrategicGame, build_game, enumerate_profiles

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_DECIMAL = re.compile(r"[+-]?(?:\d+\.\d*|\.\d+)(?:[eE][+-]?\d+)?|[+-]?\d+[eE][+-]?\d+")
_TOKEN = re.compile(r"[^\s:#\"]+")


def _parse_rational(token: str, line: int) -> Fraction:
    if _RATIONAL.fullmatch(token):
        num, _, den = token.partition("/")
        if den and int(den) == 0:
            raise GameSyntaxError(f"zero denominator in {token!r}", line=line)
        return Fraction(int(num), int(den) if den else 1)
    if _DECIMAL.fullmatch(token):
        raise GameSyntaxError(
            f"decimal payoff {token!r} is not exact; write it as a fraction p/q",
            line=line,
        )
    raise GameSyntaxError(f"not a rational number: {token!r}", line=line)


def _keyword(text: str, word: str) -> str | None:
    if text == word:
        return ""
    if text.startswith(word) and text[len(word)].isspace():
        return text[len(word):].strip()
    return None


def parse_game(text: str) -> StrategicGame:
    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    last_line = len(text.splitlines()) or 1
    it = iter(lines)

    def expect(word: str) -> tuple[int, str]:
        try:
            no, content = next(it)
        except StopIteration:
            raise GameSyntaxError(f"expected '{word}', got end of input", line=last_line) from None
        rest = _keyword(content, word)
        if rest is None:
            raise GameSyntaxError(f"expected '{word}', got {content!r}", line=no)
        return no, rest

    no, rest = expect("game")
    if not (len(rest) >= 2 and rest.startswith('"') and rest.endswith('"')):
        raise GameSyntaxError("game name must be a double-quoted string", line=no)
    try:
        name = json.loads(rest)
    except json.JSONDecodeError:
        raise GameSyntaxError(f"malformed game name {rest}", line=no) from None

    no, rest = expect("players")
    if not rest.isdigit() or int(rest) < 1:
        raise GameSyntaxError(f"player count must be a positive integer, got {rest!r}", line=no)
    n = int(rest)

    players: list[str] = []
    actions: list[list[str]] = []
    for _ in range(n):
        no, rest = expect("actions")
        who, colon, labels = rest.partition(":")
        who = who.strip()
        if not colon or not _TOKEN.fullmatch(who):
            raise GameSyntaxError("expected 'actions <player>: <labels...>'", line=no)
        if who in players:
            raise GameSyntaxError(f"actions for {who!r} given twice", line=no)
        tokens = labels.split()
        if not tokens:
            raise GameSyntaxError(f"player {who!r} has no actions", line=no)
        for tok in tokens:
            if not _TOKEN.fullmatch(tok):
                raise GameSyntaxError(f"bad action label {tok!r}", line=no)
        if len(set(tokens)) != len(tokens):
            raise GameSyntaxError(f"duplicate action label for {who!r}", line=no)
        players.append(who)
        actions.append(tokens)

    expect("payoffs")
    entries: dict[tuple[str, ...], tuple[Fraction, ...]] = {}
    for no, content in it:
        lhs, colon, rhs = content.partition(":")
        if not colon:
            raise GameSyntaxError("payoff lines look like '<labels...> : <payoffs...>'", line=no)
        labels, values = tuple(lhs.split()), rhs.split()
        if len(labels) != n:
            raise ArityMismatchError(f"expected {n} action labels, got {len(labels)}", line=no)
        if len(values) != n:
            raise ArityMismatchError(f"expected {n} payoffs, got {len(values)}", line=no)
        for k, lab in enumerate(labels):
            if lab not in actions[k]:
                raise UnknownActionError(f"player {players[k]!r} has no action {lab!r}", line=no)
        if labels in entries:
            raise DuplicateProfileError(f"profile {' '.join(labels)} given twice", line=no)
        entries[labels] = tuple(_parse_rational(v, no) for v in values)

    try:
        return build_game(name, players, actions, entries)
    except MissingProfileError as exc:
        raise MissingProfileError(str(exc), line=last_line) from None


def serialize_game(game: StrategicGame) -> str:
    """Write ``game`` in the text format; ``parse_game`` reads it back unchanged."""
    for label in (*game.players, *(a for acts in game.actions for a in acts)):
        if not _TOKEN.fullmatch(label):
            raise GameError(f"label {label!r} cannot be written to a game file")
    out = [f"game {json.dumps(game.name, ensure_ascii=False)}", f"players {game.n_players}"]
    out += [f"actions {who}: {' '.join(acts)}" for who, acts in zip(game.players, game.actions)]
    out.append("payoffs")
    for p in enumerate_profiles(game):
        values = " ".join(str(v) for v in game.payoffs[p])
        out.append(f"{' '.join(game.labels(p))} : {values}")
    return "\n".join(out) + "\n"
