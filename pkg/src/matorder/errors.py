"""Exception types shared across the package."""


class MatOrderError(ValueError):
    """Base class for all errors raised by this package."""


class ShapeError(MatOrderError):
    """Operands have incompatible dimensions."""


class BackendError(MatOrderError):
    """Operation is not defined for the scalar backend of its operands."""


class DomainError(MatOrderError):
    """Input is outside the mathematical domain of the operation."""
