"""Exception types shared across the package."""


class GreyrankError(Exception):
    """Base class for all greyrank errors."""


class ValidationError(GreyrankError):
    """Malformed or inconsistent problem input."""


class DegenerateProblemError(GreyrankError):
    """Structurally valid input on which a computation is mathematically degenerate."""
