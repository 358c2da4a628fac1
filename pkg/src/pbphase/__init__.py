"""Phase properties and Wigner functions of superposed squeezed displaced number states."""

from .errors import (
    DegreeTooLarge,
    PbPhaseError,
    QuadratureFailure,
    ResolutionTooLow,
    SingularState,
    TruncationFailure,
    WindowTooSmall,
)
from .oracle import overlap_coefficient, verify_expansion
from .phase import (
    PhaseDistribution,
    PhaseStatistics,
    PhaseWindow,
    commutator_magnitude,
    finite_s_distribution,
    number_moments,
    phase_distribution,
    phase_moments,
    phase_statistics,
    phase_variance_closed,
    squeezing_parameters,
)
from .state import (
    FockExpansion,
    StateParams,
    coefficient,
    expand,
    normalization_constant,
)
from .wigner import GridSpec, WignerGrid, wavefunction, wigner_grid, x_marginal

__version__ = "0.1.0"

__all__ = [
    "DegreeTooLarge",
    "FockExpansion",
    "GridSpec",
    "PbPhaseError",
    "PhaseDistribution",
    "PhaseStatistics",
    "PhaseWindow",
    "QuadratureFailure",
    "ResolutionTooLow",
    "SingularState",
    "StateParams",
    "TruncationFailure",
    "WignerGrid",
    "WindowTooSmall",
    "coefficient",
    "commutator_magnitude",
    "expand",
    "finite_s_distribution",
    "normalization_constant",
    "number_moments",
    "overlap_coefficient",
    "phase_distribution",
    "phase_moments",
    "phase_statistics",
    "phase_variance_closed",
    "squeezing_parameters",
    "verify_expansion",
    "wavefunction",
    "wigner_grid",
    "x_marginal",
    "__version__",
]
