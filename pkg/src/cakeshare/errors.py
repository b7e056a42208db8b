"""Exception taxonomy shared by every module.

Three branches matter to the command-line layer, which maps them to exit
codes: ``ValidationError`` (bad inputs, exit 2), ``ScenarioParseError``
(unreadable scenario text, exit 3) and ``ComputationError`` (a requested
computation cannot be carried out, exit 4).
"""

from __future__ import annotations


class CakeshareError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CakeshareError):
    """Structurally well-formed input that violates a documented invariant."""


class OutOfDomain(ValidationError):
    """A coordinate or quantile fell outside the unit interval."""


class ZeroMass(ValidationError):
    """A raw density integrates to (numerically) nothing; cannot normalize."""


class NegativeDensity(ValidationError):
    """A density specification dips below zero somewhere on [0, 1]."""


class DuplicateAgent(ValidationError):
    """The same agent was given two roles that must be distinct."""


class ArityMismatch(ValidationError):
    """Agent count disagrees between an allocation and its valuations."""


class WrongArity(ValidationError):
    """A procedure received a different number of parties than it supports."""


class Unsupported(ValidationError):
    """A parameter is outside the supported range (for example too many agents)."""


class UnknownPlayer(ValidationError):
    """A player name that does not appear in the game being queried."""


class UnknownStrategy(ValidationError):
    """A strategy label that a player does not have."""


class BadRowSum(ValidationError):
    """A proposal row does not add up to the stated total."""


class ScenarioParseError(CakeshareError):
    """Scenario text could not be parsed; carries line/column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{message} ({where})"
        super().__init__(message)
        self.line = line
        self.column = column


class ComputationError(CakeshareError):
    """A computation failed or refuses to run under the documented limits."""


class TooLarge(ComputationError):
    """An exhaustive enumeration would exceed the documented size cap."""


class MissingSection(ComputationError):
    """A report or scenario lacks the section a command needs."""
