"""Exception hierarchy shared by the library and the command line front end."""

from __future__ import annotations


class URMError(Exception):
    """Base class for every error raised by :mod:`urmatch`."""

    exit_code = 1


class GraphFormatError(URMError, ValueError):
    """Rejected graph or matching input (loops, duplicates, bad ranges, parse errors)."""

    exit_code = 2

    def __init__(self, message: str, item=None, line: int | None = None):
        self.item = item
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(URMError, ValueError):
    """Input does not satisfy an operation's precondition."""

    exit_code = 3


class BudgetExhausted(URMError):
    """The exact search hit its node budget; ``best`` holds the incumbent."""

    exit_code = 4

    def __init__(self, message: str, best=None, explored: int = 0):
        super().__init__(message)
        self.best = best
        self.explored = explored


class ProofFalsificationError(URMError, AssertionError):
    """A runtime check failed at a step a proof argument declares impossible.

    ``trace`` carries whatever part of the reduction trace had been built,
    so the failing instance can be replayed.
    """

    exit_code = 5

    def __init__(self, message: str, trace=None, graph=None):
        super().__init__(message)
        self.trace = list(trace or [])
        self.graph = graph
