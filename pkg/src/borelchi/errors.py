"""Exception types shared across the package."""


class CapacityError(RuntimeError):
    """Raised when a computation would exceed a configured size budget.

    Carries the offending size so callers (and the CLI) can report how far
    over budget the request was.
    """

    def __init__(self, message, *, required=None, budget=None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class InternalInconsistencyError(RuntimeError):
    """Raised when two independent computations of the same quantity disagree.

    This always indicates a bug (or a wrong closed-form shortcut), never bad
    user input, so it is kept distinct from ValueError.
    """
