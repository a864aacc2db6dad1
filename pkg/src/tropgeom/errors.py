"""Exception hierarchy.

Every error raised for a mathematically invalid request derives from
:class:`TropicalError`; the CLI maps these to exit code 1.
"""


class TropicalError(Exception):
    """Base class for domain errors."""


class ConventionMismatch(TropicalError):
    """Operands from the max-plus and min-plus conventions were mixed."""


class DivisionByZero(TropicalError, ZeroDivisionError):
    pass


class PreconditionViolated(TropicalError):
    pass


class DimensionMismatch(TropicalError, ValueError):
    pass


class NotSquare(TropicalError, ValueError):
    pass


class ZeroVector(TropicalError, ValueError):
    """The semimodule zero has no projective class."""


class DegenerateLine(TropicalError, ValueError):
    pass


class IdenticalPoints(TropicalError, ValueError):
    pass


class IdenticalLines(TropicalError, ValueError):
    pass


class NotIncident(TropicalError, ValueError):
    pass


class VertexPoint(TropicalError, ValueError):
    pass


class CenterOnLine(TropicalError, ValueError):
    pass


class CoaxialLines(TropicalError, ValueError):
    pass


class Incompatible(TropicalError, ValueError):
    pass


class DegenerateConfiguration(TropicalError):
    pass


class ZeroDenominator(TropicalError, ZeroDivisionError):
    pass


class SingularMatrix(TropicalError, ValueError):
    pass


class BudgetExhausted(TropicalError):
    pass


class NotInvertible(TropicalError, ValueError):
    pass


class NoSolution(TropicalError):
    """Projective matching failed; the oracle is not induced by a semilinear map."""


class AmbiguousSolution(TropicalError):
    pass


class EmptyView(TropicalError, ValueError):
    pass
