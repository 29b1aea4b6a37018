"""Exception types raised by the package."""


class MinNormError(Exception):
    """Base class for all errors raised here."""


class LengthMismatch(MinNormError, ValueError):
    """Flat data does not have ``dim ** order`` entries."""


class DimTooSmall(MinNormError, ValueError):
    """Dimension makes a closed-form denominator vanish."""


class ShapeMismatch(MinNormError, ValueError):
    """Operands have incompatible order or dimension."""


class SymmetryViolated(MinNormError, ValueError):
    """Input lacks the symmetry a specialised formula requires."""


class NumericalFailure(MinNormError, ArithmeticError):
    """An eigensolve or other numerical kernel did not converge."""
