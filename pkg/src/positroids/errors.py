"""Shared exception types."""


class PreconditionError(ValueError):
    """A mathematical precondition failed (rank, vanishing, matchability)."""
