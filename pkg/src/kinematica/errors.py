"""Typed errors raised by the library.

Every domain error derives from :class:`KinematicaError` so callers (and the
command line front end) can catch the whole family at once.
"""


class KinematicaError(Exception):
    """Base class for all domain errors in this package."""


# -- generalized trigonometry -------------------------------------------------

class PoleError(KinematicaError):
    """Tangent evaluated at (or within tolerance of) a cosine zero."""


class DomainError(KinematicaError):
    """Argument outside the domain of an inverse function."""


# -- generalized complex numbers ----------------------------------------------

class KappaMismatch(KinematicaError):
    """Arithmetic attempted between values carrying different kappa labels."""


class ZeroDivisorError(KinematicaError):
    """Inversion of a nonzero element whose squared modulus vanishes."""


class DivisionByZero(KinematicaError):
    """Inversion of the zero element."""


class AtInfinity(KinematicaError):
    """A Moebius image left the affine plane; lift to the completion instead."""


class InadmissiblePoint(KinematicaError):
    """A homogeneous pair whose components share a nonzero annihilator."""


# -- Cayley-Klein geometry ----------------------------------------------------

class ProjectionPole(KinematicaError):
    """Central projection attempted at the projection point z = -1."""


class OutsideModel(KinematicaError):
    """Point outside the region covered by the conformal model."""


class BoundarySingularity(KinematicaError):
    """Metric evaluated on the model boundary where it degenerates."""


class WrongGeometry(KinematicaError):
    """Operation only defined for a different (kappa1, kappa2) regime."""


class NullOrImaginarySeparation(KinematicaError):
    """Distance requested for a pair with negative squared separation."""


class DenominatorNotInvertible(KinematicaError):
    """Distance denominator is a zero divisor."""


# -- Clifford algebra ----------------------------------------------------------

class NotAVector(KinematicaError):
    """Multivector argument is not a pure grade-1 element."""


class GradeError(KinematicaError):
    """Multivector argument has the wrong grade support."""


class DegeneratePlane(KinematicaError):
    """Two vectors span no plane element (their wedge vanishes)."""


# -- spin group -----------------------------------------------------------------

class NotSpin(KinematicaError):
    """Matrix is not in the generalized Spin(3) group."""


# -- conformal algebra -----------------------------------------------------------

class DecompositionFailure(KinematicaError):
    """A bracket did not close in the six-generator span."""


# -- numerics --------------------------------------------------------------------

class NonConvergence(KinematicaError):
    """Adaptive quadrature exhausted its recursion depth."""


class SingularMetric(KinematicaError):
    """Conformal factor non-positive at a stencil point."""


# -- classification ---------------------------------------------------------------

class DivergentContraction(KinematicaError):
    """A rescaling exponent choice makes a structure constant blow up."""
