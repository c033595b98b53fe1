"""Enumeration budgets."""

import os

from .errors import ResourceLimit

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "SIMPLEXKIT_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive, got {raw!r}")
    return value


def check_budget(needed: int, budget: int | None = None) -> None:
    budget = default_budget() if budget is None else budget
    if needed > budget:
        raise ResourceLimit(needed, budget)
