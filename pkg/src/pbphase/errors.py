"""Exception types shared across the package."""


class PbPhaseError(Exception):
    """Base class for all pbphase errors."""


class DegreeTooLarge(PbPhaseError):
    """Polynomial degree exceeds the configured cap (overflow risk)."""


class SingularState(PbPhaseError):
    """The requested superposition has zero norm (e.g. odd case at alpha = 0)."""


class TruncationFailure(PbPhaseError):
    """Fock-space truncation did not converge below the degree cap."""


class ResolutionTooLow(PbPhaseError):
    """Phase grid too coarse for the expansion's highest Fourier mode."""


class WindowTooSmall(PbPhaseError):
    """Finite phase-space dimension smaller than the expansion cutoff."""


class QuadratureFailure(PbPhaseError):
    """Adaptive quadrature failed to reach the requested tolerance."""
