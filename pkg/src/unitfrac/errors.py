"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates an operation's contract (bad range, type, or flag)."""


class InternalCheckError(RuntimeError):
    """An internal consistency re-check failed; indicates a bug, not bad input."""
