"""Exception hierarchy.

Every error raised by the package derives from :class:`SerinvError`; the CLI
maps it to exit code 3.
"""


class SerinvError(ArithmeticError):
    pass


class VariableMismatch(SerinvError, ValueError):
    pass


class PrefactorMismatch(SerinvError, ValueError):
    pass


class NonUnitConstantTerm(SerinvError, ValueError):
    pass


class PrefactorNotOne(SerinvError, ValueError):
    pass


class NonzeroInnerConstant(SerinvError, ValueError):
    pass


class ZeroLinearTerm(SerinvError, ValueError):
    """Reversion needs a nonzero linear coefficient."""


class DegeneratePadeTable(SerinvError):
    """The Padé linear system is singular (blocked table)."""


class NearPole(SerinvError):
    pass


class InsufficientOrder(SerinvError, ValueError):
    pass


class NotNormalized(SerinvError, ValueError):
    pass


class OutOfRange(SerinvError):
    pass


class NegativeRadicand(SerinvError):
    pass


class DomainError(SerinvError, ValueError):
    pass


class ConvergenceFailure(SerinvError):
    pass


class UnsupportedOrder(SerinvError, ValueError):
    pass
