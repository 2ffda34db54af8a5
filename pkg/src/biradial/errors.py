"""Exception hierarchy shared by every module."""

from __future__ import annotations


class BiradialError(Exception):
    """Base class for all library errors."""


class GraphError(BiradialError, ValueError):
    """A graph, walk, or identifier is structurally malformed."""


class WalkError(GraphError):
    """A walk is not a walk of the graph (edge not joining its flanking vertices)."""


class BudgetExceeded(BiradialError):
    """An exhaustive search hit its state budget before reaching an answer."""

    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exceeded budget of {budget} states")
        self.budget = budget


class PreconditionError(BiradialError, ValueError):
    """An operation was called on input outside its domain."""


class ReplayError(BiradialError, ValueError):
    """A certificate step violates its construction rule."""

    def __init__(self, rule: str, index: int | None, reason: str):
        where = rule if index is None else f"{rule}[{index}]"
        super().__init__(f"{where}: {reason}")
        self.rule = rule
        self.index = index
        self.reason = reason


class TrivialAlmostStrongError(PreconditionError):
    """The single-vertex graph satisfies the almost-strong definition but no tree rule builds it."""


class UnsatisfiableSize(PreconditionError):
    """A random program cannot be generated within the requested size."""


class SchemaError(GraphError):
    """A JSON document does not match its schema; ``field`` locates the problem."""

    def __init__(self, field: str, reason: str):
        super().__init__(f"{field}: {reason}" if field else reason)
        self.field = field
        self.reason = reason
