"""Exception types shared across the package.

Every numerical failure mode gets its own class so callers can react to the
specific condition (and the CLI can map them onto exit codes) instead of
pattern-matching message strings.
"""


class SpectraError(Exception):
    """Base class for all errors raised by this package."""


class JumpDiscontinuityError(SpectraError):
    """Evaluation at a jump discontinuity of the dispersion relation."""


class NotDifferentiableError(SpectraError):
    """Derivative requested at a point where the symbol is not differentiable."""


class WiltonResonanceError(SpectraError):
    """A harmonic of the carrier is resonant; the wave expansion breaks down."""


class ContinuationFailureError(SpectraError):
    """Newton iteration for the traveling wave failed to converge."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class StableCollisionError(SpectraError):
    """Collision fails the sign condition for instability; no isola exists."""


class DegenerateGroupVelocityError(SpectraError):
    """Colliding modes share a group velocity; the solvability system is singular."""


class SecondaryResonanceError(SpectraError):
    """A shifted mode hits a further collision; first-order coefficients blow up."""


class DegenerateQuartetError(SpectraError):
    """Vanishing quartet coefficient ratio; the modulus of the mode ratio is undefined."""


class BFResonanceError(SpectraError):
    """A denominator of the modulational-instability constants vanishes."""


class DegenerateCurvatureError(SpectraError):
    """Second derivative of the dispersion relation vanishes at the carrier."""


class StableModelError(SpectraError):
    """Modulational-instability curve requested for a stable configuration."""


class SignRestrictionError(SpectraError):
    """Amplitude sign outside the validity branch of the expansion."""


class NewtonDivergedError(SpectraError):
    """Eigenpair refinement did not converge."""

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = list(history) if history is not None else []


class EigFailureError(SpectraError):
    """The dense eigensolver failed."""


class InvalidDataError(SpectraError):
    """Input data outside the domain of a fitting routine."""


class ConfigError(SpectraError):
    """Malformed experiment configuration or model specification string."""
