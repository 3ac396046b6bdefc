"""Exception types shared across the package."""


class CalogeroError(Exception):
    """Base class for all package errors."""


class DomainError(CalogeroError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Gamma function evaluated at a nonpositive integer."""


class OverflowRangeError(CalogeroError, OverflowError):
    """A requested value exceeds the double-precision exponent range.

    Raised instead of silently saturating, e.g. for the growing solution
    once (Re omega) * r passes ~700.
    """


class ConvergenceError(CalogeroError, RuntimeError):
    """An iterative scheme failed to reach its tolerance."""


class NonContractionError(CalogeroError, ValueError):
    """Picard iteration requested on a ray segment where it is not contractive."""


class FitWindowError(CalogeroError, ValueError):
    """Boundary-coefficient fit window is unusable (too few points or ill-conditioned)."""


class SpectrumHitError(CalogeroError, ValueError):
    """Resolvent requested at (or numerically indistinguishable from) a spectral point."""

    def __init__(self, message, z=None, mode=None):
        super().__init__(message)
        self.z = z
        self.mode = mode


class NotAGeneratorError(CalogeroError, ValueError):
    """Time evolution requested for an extension outside the generation range.

    Covers the non-generating band |kappa| in [e^{-nu pi/2}, e^{nu pi/2}]
    including its boundary, where generation is an open problem and the
    package refuses to experiment.
    """


class GridResolutionError(CalogeroError, ValueError):
    """A grid is too coarse to resolve the oscillation it must carry."""


class QuadratureError(CalogeroError, RuntimeError):
    """Composite quadrature failed to meet its declared tolerance."""


class InvalidChoiceError(CalogeroError, ValueError):
    """A per-mode extension choice violates the generation condition."""
