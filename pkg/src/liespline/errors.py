"""Exception types shared across the package."""


class LieSplineError(Exception):
    """Base class for all errors raised by this package."""


class AngleNearPi(LieSplineError):
    """Rotation is too close to a branch point of the matrix logarithm.

    Raised by log when the principal rotation angle is within the branch
    margin of pi, and by the dexp kernels when the angle approaches 2*pi
    where dexp becomes singular.
    """


class NotOrthonormal(LieSplineError):
    """A matrix that should be a rotation fails the orthonormality check."""


class UnsupportedOrder(LieSplineError):
    """Requested expansion or interpolation order is not implemented."""


class NonmonotoneKnots(LieSplineError):
    """Knot times are not strictly increasing."""


class MissingVelocities(LieSplineError):
    """A velocity-fed construction was requested without knot velocities."""


class OutOfDomain(LieSplineError):
    """Evaluation time lies outside the spline's knot span."""


class ScenarioError(LieSplineError):
    """A scenario file is malformed or inconsistent."""
