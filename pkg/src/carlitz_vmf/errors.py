"""Exception types shared across the package."""


class CarlitzVMFError(Exception):
    pass


class MixedGradeError(CarlitzVMFError, ArithmeticError):
    """Inversion (or similar) applied to a scalar supported on several grades."""


class NotTauImageError(CarlitzVMFError, ValueError):
    """Untwist applied to something outside the image of the twist."""


class EvaluationPoleError(CarlitzVMFError, ArithmeticError):
    """A specialization hit an uncancelled pole."""


class PrecisionError(CarlitzVMFError, ArithmeticError):
    """A computation asked for coefficients beyond the tracked truncation."""


class NotInSpanError(CarlitzVMFError, ValueError):
    """A series is not in the span of the requested basis; carries residual."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotIrreducibleError(CarlitzVMFError, ValueError):
    """A prime was required but a reducible polynomial was supplied."""
