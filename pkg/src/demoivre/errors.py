"""Exception types shared across the package."""


class InvalidInstanceError(ValueError):
    """Raised when (n, d, R) fail the validity requirements."""


class PrecisionError(RuntimeError):
    """Raised when a numeric routine cannot meet its tolerance even after
    escalating the working precision."""
