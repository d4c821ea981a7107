"""Exception hierarchy shared by all modules."""


class SGapError(Exception):
    """Base class for every error raised by this package."""


class SpecSyntaxError(SGapError, ValueError):
    """Spec text does not match the ``finite:`` / ``delta:`` grammar."""


class ValidationError(SGapError, ValueError):
    """Spec is well-formed but violates a gap-set invariant."""


class DimensionError(SGapError, ValueError):
    """Matrix shape is incompatible with the requested operation."""


class CaseDispatchError(SGapError, RuntimeError):
    """No closed-form case applies. Unreachable for canonical specs."""


class ConvergenceError(SGapError, RuntimeError):
    """Iterative method hit its iteration cap before reaching tolerance."""


class NonIntegerCoefficient(SGapError, ArithmeticError):
    """A series coefficient that must be an integer was not."""


class NormalizationError(SGapError, ValueError):
    """Zeta function does not satisfy zeta(0) = 1."""


class DegenerateError(SGapError, ValueError):
    """Operation requires |S| > 1."""
