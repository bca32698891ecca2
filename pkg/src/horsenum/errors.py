"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where a quantity is defined."""


class InexactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder (an internal bug)."""


class TheoremViolation(RuntimeError):
    """A measured quantity contradicts a proven bound."""
