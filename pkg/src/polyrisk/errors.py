"""Exception types shared across the package."""

from __future__ import annotations


class ValidationError(ValueError):
    """Raised when declared data violates an invariant.

    Carries the complete list of violations found, not just the first,
    so callers can report everything wrong with a file in one pass.
    """

    def __init__(self, errors: list[str] | str):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = errors
        super().__init__("; ".join(errors))


class InventoryError(ValidationError):
    """Invalid system inventory (duplicate names, bad counts or weights)."""


class ScenarioError(ValidationError):
    """Scenario document failed to parse or validate."""


class UndefinedContributionError(ValueError):
    """Contribution requested for a dimension whose total value is zero."""


class ProfileMismatchError(ValueError):
    """Profiles being combined do not share the same dimension order."""
