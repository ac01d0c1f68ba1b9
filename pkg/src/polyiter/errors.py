"""Shared exception types."""


class BudgetError(Exception):
    """A requested computation exceeds its configured enumeration or
    point-counting budget.  Raised instead of silently truncating."""
