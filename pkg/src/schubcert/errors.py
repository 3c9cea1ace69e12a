"""Exception types shared across the package."""


class UnsupportedOperationError(Exception):
    """Raised for inputs outside the implemented scope.

    Products and pipelines refuse loudly instead of guessing; a caller never
    gets a silently wrong cycle.
    """


class UnsupportedProductError(UnsupportedOperationError):
    """Intersection product requested outside the supported shapes."""


class EnumerationBudgetError(Exception):
    """Brute-force enumeration would exceed the configured weight budget."""


class ExactnessError(ArithmeticError):
    """An exact-arithmetic invariant failed (non-integral division, mismatched
    cross-check routes).  Indicates a bug, never bad user input."""


class DivisibilityError(ValueError):
    """Polynomial quotient requested where no exact quotient exists."""


class NormalizationError(Exception):
    """A cycle layer cannot be normalized to coefficient gcd 1."""


class CriterionFailureSignal(Exception):
    """A lifting step hit a congruence that only fails when the decomposition
    criterion fails."""
