"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
1 for bad user input, 2 for a shape that fails validation, 3 for a numeric
failure inside a construction.
"""


class ReuleauxError(ValueError):
    exit_code = 3


class DegenerateCircles(ReuleauxError):
    """The two unit circles are (nearly) concentric."""


class NoIntersection(ReuleauxError):
    """The two unit circles are too far apart to meet."""


class EvenHarmonic(ReuleauxError):
    exit_code = 1


class InvalidHarmonic(ReuleauxError):
    exit_code = 1


class BreakpointAmbiguity(ReuleauxError):
    """Curvature requested exactly at a vertex/arc junction."""


class InvalidSideCount(ReuleauxError):
    exit_code = 1


class ConstraintViolation(ReuleauxError):
    exit_code = 2


class NotConvex(ReuleauxError):
    exit_code = 2

    def __init__(self, min_curvature: float, message: str | None = None):
        self.min_curvature = min_curvature
        super().__init__(message or f"not convex: min(h'' + h) = {min_curvature:.6g}")


class EpsOutOfRange(ReuleauxError):
    exit_code = 1


class AssemblyDegenerate(ReuleauxError):
    pass


class TooFewVertices(ReuleauxError):
    exit_code = 1


class GeometryFailure(ReuleauxError):
    pass


class InvalidParameter(ReuleauxError):
    exit_code = 1
