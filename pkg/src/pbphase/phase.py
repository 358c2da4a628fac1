"""Phase distribution and phase/number statistics on a 2pi window.

The distribution is the squared modulus of the Fock expansion's Fourier sum,
evaluated on a uniform grid over [theta0, theta0 + 2pi).  Moments are
integrated by composite Simpson with the periodic closure point appended;
the closed-form variance sums the same information coefficientwise and the
two must agree, which the test-suite enforces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ResolutionTooLow, WindowTooSmall
from .state import FockExpansion

TWO_PI = 2.0 * math.pi
UNIFORM_DENSITY = 1.0 / TWO_PI

DEFAULT_POINTS = 1024

# Conjugate-pair degeneracy threshold: below this commutator magnitude the
# squeezing parameters lose their reference level and become undefined.
COMMUTATOR_FLOOR = 1e-9


@dataclass(frozen=True)
class PhaseWindow:
    """Uniform grid of `points` phase values starting at theta0, step 2pi/points."""

    theta0: float = -math.pi
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if self.points < 1:
            raise ValueError(f"points must be positive, got {self.points}")

    @property
    def thetas(self) -> np.ndarray:
        return self.theta0 + TWO_PI * np.arange(self.points) / self.points


@dataclass(frozen=True)
class PhaseDistribution:
    """Sampled phase density P(theta_k) >= 0 with unit integral over the window."""

    window: PhaseWindow
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)


@dataclass(frozen=True)
class PhaseStatistics:
    """Phase and photon-number moments plus the squeezing parameters.

    s_number and s_phase are None when the number-phase commutator is too
    small to serve as a reference level (uniform-phase states).
    """

    mean_phase: float
    phase_variance: float
    n_mean: float
    n_variance: float
    commutator_mag: float
    s_number: float | None
    s_phase: float | None


def min_points(cutoff: int) -> int:
    """Alias-free grid floor: 8 samples per highest Fourier mode, kept even."""
    needed = 8 * (cutoff + 1)
    return needed + (needed % 2)


def window_for(expansion: FockExpansion, theta0: float = -math.pi,
               points: int | None = None) -> PhaseWindow:
    """Window with the default resolution raised to the expansion's floor."""
    if points is None:
        points = max(DEFAULT_POINTS, min_points(expansion.cutoff))
    return PhaseWindow(theta0=theta0, points=points)


def _fourier_sum(coefficients: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """sum_m C_m e^(i m theta), accumulated in ascending m."""
    z = np.exp(1j * thetas)
    zp = np.ones_like(z)
    acc = coefficients[0] * zp
    for c in coefficients[1:]:
        zp = zp * z
        acc = acc + c * zp
    return acc


def phase_distribution(expansion: FockExpansion,
                       window: PhaseWindow | None = None) -> PhaseDistribution:
    """Continuum phase density sampled on the window grid.

    P(theta) = |sum_m C_m e^(i m theta)|^2 / 2pi.  The grid must oversample
    the highest mode by 8x so that Simpson moments downstream are alias-free.
    """
    if window is None:
        window = window_for(expansion)
    if window.points < 8 * (expansion.cutoff + 1):
        raise ResolutionTooLow(
            f"{window.points} points cannot resolve cutoff {expansion.cutoff}; "
            f"need at least {8 * (expansion.cutoff + 1)}"
        )
    amplitude = _fourier_sum(expansion.coefficients, window.thetas)
    values = (amplitude.real ** 2 + amplitude.imag ** 2) * UNIFORM_DENSITY
    return PhaseDistribution(window=window, values=values)


def finite_s_distribution(expansion: FockExpansion, s: int,
                          theta0: float = -math.pi) -> tuple[np.ndarray, np.ndarray]:
    """Discrete phase density on the s+1 orthogonal phase values.

    Returns (thetas, weights) with thetas_m = theta0 + 2pi m/(s+1); the
    weights times the cell width 2pi/(s+1) sum to one up to truncation.
    """
    if s < expansion.cutoff:
        raise WindowTooSmall(
            f"finite dimension s={s} is below the expansion cutoff "
            f"{expansion.cutoff}"
        )
    thetas = theta0 + TWO_PI * np.arange(s + 1) / (s + 1)
    amplitude = _fourier_sum(expansion.coefficients, thetas)
    weights = (amplitude.real ** 2 + amplitude.imag ** 2) * UNIFORM_DENSITY
    return thetas, weights


def _simpson_closed(values: np.ndarray, step: float) -> float:
    """Composite Simpson over a closed grid (odd node count, even intervals)."""
    if values.size % 2 == 0:
        raise ValueError("Simpson closure needs an even number of intervals")
    acc = values[0] + values[-1] + 4.0 * np.sum(values[1:-1:2]) \
        + 2.0 * np.sum(values[2:-1:2])
    return float(acc * step / 3.0)


def phase_moments(dist: PhaseDistribution) -> tuple[float, float]:
    """Mean and variance of the phase over the window, by Simpson integration."""
    window = dist.window
    thetas = np.append(window.thetas, window.theta0 + TWO_PI)
    values = np.append(dist.values, dist.values[0])  # periodic closure
    step = TWO_PI / window.points
    mean = _simpson_closed(thetas * values, step)
    second = _simpson_closed(thetas * thetas * values, step)
    return mean, second - mean * mean


def phase_variance_closed(expansion: FockExpansion) -> float:
    """Coefficientwise phase variance on the symmetric window (theta0 = -pi).

    pi^2/3 plus alternating off-diagonal sums over coefficient pairs; the
    mean-phase correction enters through the imaginary part of the
    first-order sum and vanishes for real coefficients.
    """
    c = expansion.coefficients
    m_top = expansion.cutoff
    s1 = 0.0 + 0.0j
    s2 = 0.0 + 0.0j
    for delta in range(1, m_top + 1):
        cross = np.sum(c[delta:] * np.conj(c[:-delta]))
        signed = cross if delta % 2 == 0 else -cross
        s1 += signed / delta
        s2 += signed / (delta * delta)
    return math.pi ** 2 / 3.0 + 4.0 * s2.real - 4.0 * s1.imag ** 2


def number_moments(expansion: FockExpansion) -> tuple[float, float]:
    """Photon-number mean and variance from the coefficient probabilities."""
    probs = expansion.probabilities
    ms = np.arange(probs.size)
    n_mean = float(np.sum(ms * probs))
    n_second = float(np.sum(ms * ms * probs))
    return n_mean, n_second - n_mean * n_mean


def commutator_magnitude(dist: PhaseDistribution) -> float:
    """|<[n, Phi]>| = |1 - 2pi P(theta0)|, from the window-start density."""
    return abs(1.0 - TWO_PI * float(dist.values[0]))


def squeezing_parameters(n_variance: float, phase_variance: float,
                         commutator_mag: float) -> tuple[float | None, float | None]:
    """Number and phase squeezing relative to half the commutator magnitude.

    -1 means maximum squeezing; values below 0 are squeezed.  Both are None
    when the commutator is degenerate (uniform-phase states).
    """
    if commutator_mag < COMMUTATOR_FLOOR:
        return None, None
    reference = 0.5 * commutator_mag
    return n_variance / reference - 1.0, phase_variance / reference - 1.0


def phase_statistics(expansion: FockExpansion,
                     window: PhaseWindow | None = None) -> PhaseStatistics:
    """All phase/number statistics of an expansion in one pass."""
    dist = phase_distribution(expansion, window)
    mean, variance = phase_moments(dist)
    n_mean, n_variance = number_moments(expansion)
    comm = commutator_magnitude(dist)
    s_number, s_phase = squeezing_parameters(n_variance, variance, comm)
    return PhaseStatistics(mean_phase=mean, phase_variance=variance,
                           n_mean=n_mean, n_variance=n_variance,
                           commutator_mag=comm, s_number=s_number,
                           s_phase=s_phase)
