"""Shared exception types."""


class CapExceededError(RuntimeError):
    """Raised when an input exceeds a configured exact-computation cap.

    The exact solvers never fall back to approximations; they fail loudly
    instead.
    """
