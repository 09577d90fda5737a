"""Exceptions shared across the search-style modules."""


class BudgetExceededError(RuntimeError):
    """An exhaustive routine refused to start or finish within its budget.

    Raised instead of silently truncating; the message carries the offending
    size and the configured ceiling.
    """
