"""Exception hierarchy shared by every module.

The CLI maps the four families below onto its exit codes, so new errors
should subclass one of them rather than ``BraidError`` directly.
"""

from __future__ import annotations


class BraidError(ValueError):
    """Base class for all library errors."""


# -- parsing ---------------------------------------------------------------


class ParseError(BraidError):
    pass


class MalformedToken(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


# -- word algebra ----------------------------------------------------------


class StrandMismatch(BraidError):
    pass


class PatternMismatch(BraidError):
    pass


class InvalidPosition(BraidError):
    pass


class RelationDisabled(BraidError):
    pass


# -- parity guards ---------------------------------------------------------


class OddStrandCount(BraidError):
    pass


# -- moves -----------------------------------------------------------------


class MoveError(BraidError):
    pass


class SuffixMismatch(MoveError):
    pass


class ParityMismatch(MoveError):
    pass


class LetterMismatch(MoveError):
    pass


class EmptyWord(MoveError):
    pass


class RangeError(MoveError):
    pass


class FactorizationFailed(MoveError):
    pass


class EvenHalfIndex(MoveError):
    pass


class UnknownMove(MoveError):
    pass


# -- search ----------------------------------------------------------------


class ConfigError(BraidError):
    pass
