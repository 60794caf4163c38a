"""Exception types shared across the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AlgebraError):
    """Syntax error in a polynomial expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(AlgebraError):
    """A mathematically invalid request (reducible minimal polynomial,
    ramified prime outside the supported hypothesis, degree caps, ...)."""
