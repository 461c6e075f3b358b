"""Exceptions shared across modules."""


class BudgetExceeded(RuntimeError):
    """A computation hit its configured resource limit."""

    def __init__(self, message: str, stats: dict | None = None):
        stats = stats or {}
        super().__init__(f"{message} (partial statistics: {stats})" if stats else message)
        self.stats = stats
