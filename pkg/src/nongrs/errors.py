"""Exception types shared across the package."""

from __future__ import annotations


class NongrsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NongrsError, ValueError):
    """An input violates a precondition (parameter window, distinctness, ...)."""


class BudgetExceeded(NongrsError):
    """An exhaustive computation would exceed its configured budget.

    ``budget`` names the limit that was hit so callers (and the CLI) can
    report which knob to turn.
    """

    def __init__(self, budget: str, needed: int, limit: int):
        self.budget = budget
        self.needed = needed
        self.limit = limit
        super().__init__(f"{budget} exceeded: need {needed}, limit {limit}")


class InexactDivision(NongrsError, ArithmeticError):
    """A closed-form count did not divide exactly."""
