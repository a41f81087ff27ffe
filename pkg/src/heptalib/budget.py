"""Step budgets for the exponential searches.

Every potentially exponential search (hole enumeration, induced-path DFS,
isomorphism backtracking) ticks a Budget. Exhaustion raises
BudgetExceededError instead of silently returning a wrong answer; the
default limit can be overridden per call or through the HEPTALIB_BUDGET
environment variable.
"""

from __future__ import annotations

import os

from .errors import BudgetExceededError

DEFAULT_BUDGET = 10_000_000


def default_budget_limit() -> int:
    raw = os.environ.get("HEPTALIB_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise BudgetExceededError(f"HEPTALIB_BUDGET is not an integer: {raw!r}") from exc
    return value


class Budget:
    """A mutable step counter with a hard limit."""

    __slots__ = ("limit", "steps", "label")

    def __init__(self, limit: int | None = None, label: str = "search"):
        self.limit = default_budget_limit() if limit is None else limit
        self.steps = 0
        self.label = label

    def spend(self, amount: int = 1) -> None:
        self.steps += amount
        if self.steps > self.limit:
            raise BudgetExceededError(
                f"{self.label} exceeded budget of {self.limit} steps",
                steps=self.steps,
            )


def ensure_budget(budget: Budget | int | None, label: str) -> Budget:
    """Coerce an optional limit or existing Budget into a Budget."""
    if isinstance(budget, Budget):
        return budget
    return Budget(budget, label=label)
