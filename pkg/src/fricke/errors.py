"""Exception hierarchy shared across the package.

``PreconditionError`` marks violations of mathematical preconditions
(forbidden traces, degenerate configurations, conic violations).  The CLI
maps it to a dedicated exit code, distinct from syntax/usage errors.
"""


class PreconditionError(ValueError):
    """A mathematical precondition of an operation does not hold."""


class SingularMatrixError(PreconditionError):
    """Matrix inversion was requested for a (numerically) singular matrix."""


class ConicViolationError(PreconditionError):
    """The point (a, b) does not satisfy the determinant-one conic."""


class TraceMismatchError(PreconditionError):
    """Two matrices that must share a trace do not."""


class ParabolicTraceError(PreconditionError):
    """An operation requires trace != +-2 (diagonalizable, non-central)."""


class ReduciblePairError(PreconditionError):
    """The matrix pair has a common eigenvector (lies over the surface J = 0)."""


class DegenerateFiberError(PreconditionError):
    """The fiber direction is degenerate (t^2 = 4), the map is not defined."""
