"""Exception types and the node-expansion budget shared by all searches."""

from __future__ import annotations


class InputError(ValueError):
    """Bad caller input: out-of-range vertex, malformed file, parameter below minimum."""


class ParseError(InputError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class InvariantViolation(RuntimeError):
    """A guarantee from the theory failed to hold. Always a bug signal."""


class Refusal(RuntimeError):
    """The request is outside what can be decided exactly (size limits, unknown thresholds)."""


class BudgetExhausted(RuntimeError):
    """A bounded search ran out of node expansions before reaching a verdict.

    ``lower_bound`` carries the best value certified before the budget ran out,
    for searches that climb a parameter (ladder index, tree rank).
    """

    def __init__(self, message: str = "budget exhausted", lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound


class Budget:
    """Counts node expansions; ``None`` means unlimited.

    One instance may be threaded through several searches so they draw on a
    common allowance.
    """

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit < 0:
            raise InputError("budget must be nonnegative")
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1) -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExhausted(f"budget of {self.limit} node expansions exhausted")

    @property
    def unlimited(self) -> bool:
        return self.limit is None

    def __repr__(self) -> str:
        return f"Budget(limit={self.limit}, used={self.used})"


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
