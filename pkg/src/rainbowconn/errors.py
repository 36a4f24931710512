"""Exception types shared across the package."""


class RainbowError(Exception):
    """Base class for all package errors."""


class InvalidInputError(RainbowError, ValueError):
    """Input violates an operation's precondition (bad graph, bad coloring, ...)."""


class CapacityError(RainbowError):
    """Request exceeds a documented implementation cap."""


class InfeasibleError(RainbowError, ValueError):
    """No object with the requested parameters exists."""


class ParseError(InvalidInputError):
    """Malformed text in one of the interchange formats."""
