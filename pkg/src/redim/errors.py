"""Exception types shared across the library."""

__all__ = [
    "DomainError",
    "NonCanonicalError",
    "CompositionError",
    "ArityError",
    "BasisError",
]


class DomainError(ValueError):
    """An input lies outside the declared domain of a map."""


class NonCanonicalError(ValueError):
    """Digit data does not describe a canonical repeating expansion."""


class CompositionError(ValueError):
    """Two bijections cannot be chained because their spaces differ."""


class ArityError(ValueError):
    """A tuple has zero arity or does not match the expected dimension."""


class BasisError(ValueError):
    """A proposed basis has the wrong size or is singular."""
