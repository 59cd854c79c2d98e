"""Exception types shared across the package."""


class PtError(Exception):
    """Error with a stable machine-readable code (CYCLE, NOT_STRONG, ...)."""

    def __init__(self, code: str, message: str, **details):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.details = details


class BudgetExceeded(PtError):
    """A combinatorial search passed its work budget.

    ``best`` carries the best lower bound found before the budget ran out.
    """

    def __init__(self, message: str, best=None, **details):
        super().__init__("BUDGET_EXCEEDED", message, **details)
        self.best = best


class InternalError(PtError):
    """An internal invariant failed; indicates a bug, not bad input."""

    def __init__(self, message: str, **details):
        super().__init__("INTERNAL", message, **details)
