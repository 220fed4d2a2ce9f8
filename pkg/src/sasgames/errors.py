"""
    Exceptions raised by sasgames.

All of them derive from `SasError`; the ones signalling bad input also
derive from `ValueError` so callers that only know the standard library
can still catch them.
"""
from typing import Optional


class SasError(Exception):
    """Base class for every error raised by the package."""


class GameFormatError(SasError, ValueError):
    """A game or automaton document is malformed.

    Attributes:
        line (Optional[int]): 1-based line of a syntax error.
        vertex (Optional[int]): Vertex (or state) id of a semantic error.
    """

    def __init__(
        self,
        message: str,
        line: Optional[int] = None,
        vertex: Optional[int] = None,
    ):
        if line is not None:
            message = f"line {line}: {message}"
        elif vertex is not None:
            message = f"vertex {vertex}: {message}"
        super().__init__(message)
        self.line = line
        self.vertex = vertex


class PreconditionError(SasError, ValueError):
    """An operation was called on a region violating its precondition."""

    def __init__(self, message: str, vertex: Optional[int] = None):
        if vertex is not None:
            message = f"{message} (offending vertex {vertex})"
        super().__init__(message)
        self.vertex = vertex


class BoundExceededError(SasError):
    """A brute-force oracle would exceed its configured bound."""

    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: {size} exceeds the configured bound {bound}")
        self.size = size
        self.bound = bound


class StrategyError(SasError):
    """A strategy is partial, proposes an illegal move or does not fit its game."""
