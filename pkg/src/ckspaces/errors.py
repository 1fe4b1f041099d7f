"""Exception types shared across the package."""


class CKError(Exception):
    """Base class for all errors raised by this package."""


class ShapeError(CKError):
    """Matrix dimensions do not fit the requested operation."""


class DomainError(CKError):
    """A scalar or structural argument is outside the operation's domain."""


class ExistenceError(DomainError):
    """The requested space size is impossible (dimension bound violated)."""


class ValidationError(CKError):
    """A candidate basis violates one of the defining matrix conditions.

    `condition` names the first violated condition (even_dimension,
    orthogonality, skewness, square, anticommutation, independence) and
    `indices` holds the offending basis index or index pair.
    """

    def __init__(self, condition: str, indices: tuple = ()):
        self.condition = condition
        self.indices = tuple(indices)
        where = f" at {self.indices}" if self.indices else ""
        super().__init__(f"condition '{condition}' violated{where}")


class InvariantViolation(CKError):
    """An internal consistency check failed; indicates a bug, not bad input."""
