"""Exception hierarchy shared by every matroidkit module."""
from __future__ import annotations


class MatroidKitError(Exception):
    """Base class for all errors raised by matroidkit."""


class InputError(MatroidKitError):
    """A caller passed something outside an operation's preconditions."""


class AxiomError(InputError):
    """A circuit family is not a clutter or fails weak elimination."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class ConstructionError(MatroidKitError):
    """A construction was asked for one of its degenerate cases."""


class ParseError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


class ConfigError(MatroidKitError):
    """An environment setting could not be interpreted."""


class SearchLimitError(MatroidKitError):
    """An exhaustive search was asked to run above its configured cap."""
