"""Exception types shared across the toolkit."""

import os


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class ResourceCapError(RuntimeError):
    """An enumeration would exceed its configured cap.

    ``partial`` carries whatever could still be computed cheaply (for example a
    closed form that could not be cross-checked by enumeration).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VerificationError(AssertionError):
    """A checked identity or inequality failed."""


class DegenerateCurveError(ValueError):
    """Too few echelon pivots were found for a curve.

    ``rank`` is the number of pivots found; ``exhausted`` is True when the whole
    Taylor expansion was inspected, i.e. the curve itself is degenerate rather
    than the truncation too short.
    """

    def __init__(self, message, rank, exhausted):
        super().__init__(message)
        self.rank = rank
        self.exhausted = exhausted


def cap_from_env(default):
    """Enumeration cap, overridable through ``TNV_MAX_CELLS``."""
    raw = os.environ.get("TNV_MAX_CELLS")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"TNV_MAX_CELLS must be an integer, got {raw!r}") from None
