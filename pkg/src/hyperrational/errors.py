"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GameError(ValueError):
    """Base class for all errors raised by this package.

    ``line`` is set when the error can be traced to a line of a game file.
    """

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MissingProfileError(GameError):
    pass


class DuplicateProfileError(GameError):
    pass


class ArityMismatchError(GameError):
    pass


class UnknownActionError(GameError):
    pass


class IndexOutOfRangeError(GameError, IndexError):
    pass


class FreeSlotMismatchError(GameError):
    pass


class UnsupportedOrientationError(GameError):
    pass


class AsymmetricActionSetsError(GameError):
    pass


class NotTwoPlayerError(GameError):
    pass


class InvalidRoundsError(GameError):
    pass


class GameSyntaxError(GameError):
    pass
