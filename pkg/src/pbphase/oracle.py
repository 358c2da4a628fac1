"""Quadrature oracle for the closed-form Fock coefficients.

Each coefficient is recomputed as the position-space overlap integral of a
Fock wavefunction with the superposition wavefunction, by adaptive Simpson
refinement.  Nothing here touches the coefficient engine, so agreement
between the two paths validates both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import QuadratureFailure
from .state import StateParams, coefficient
from .wigner import SQRT2, wavefunction

MAX_REFINEMENT_LEVELS = 24


def fock_wavefunction(m: int, x) -> np.ndarray:
    """Harmonic-oscillator eigenfunction of index m (real, unit norm)."""
    x = np.asarray(x, dtype=float)
    log_pref = -0.5 * (m * math.log(2.0) + specfun.log_factorial(m)) \
        - 0.25 * math.log(math.pi)
    return math.exp(log_pref) * np.exp(-0.5 * x * x) * specfun.hermite(m, x)


def _adaptive_simpson(f, a: float, b: float, tol: float,
                      seed_panels: int = 32) -> complex:
    """Adaptive Simpson with Richardson correction, batched over subintervals.

    The worklist starts from `seed_panels` uniform panels so oscillatory
    structure is sampled before any convergence decision; every refinement
    level then bisects all still-unconverged intervals at once, evaluating
    the integrand on numpy arrays.  Raises QuadratureFailure when
    MAX_REFINEMENT_LEVELS levels do not reach the per-interval error budget.
    """
    edges = np.linspace(a, b, seed_panels + 1)
    xs = np.sort(np.concatenate([edges, 0.5 * (edges[:-1] + edges[1:])]))
    fs = np.asarray(f(xs), dtype=complex)
    left, right = edges[:-1], edges[1:]
    f_left, f_mid, f_right = fs[0:-1:2], fs[1::2], fs[2::2]
    simpson = (right - left) / 6.0 * (f_left + 4.0 * f_mid + f_right)
    budget = np.full(seed_panels, tol / seed_panels)

    total = 0.0 + 0.0j
    for _ in range(MAX_REFINEMENT_LEVELS):
        mid = 0.5 * (left + right)
        x_lm = 0.5 * (left + mid)
        x_rm = 0.5 * (mid + right)
        new_x = np.concatenate([x_lm, x_rm])
        new_f = np.asarray(f(new_x), dtype=complex)
        k = left.size
        f_lm, f_rm = new_f[:k], new_f[k:]

        s_left = (mid - left) / 6.0 * (f_left + 4.0 * f_lm + f_mid)
        s_right = (right - mid) / 6.0 * (f_mid + 4.0 * f_rm + f_right)
        err = (s_left + s_right - simpson) / 15.0
        done = np.abs(err) <= budget

        total += np.sum(s_left[done] + s_right[done] + err[done])
        if np.all(done):
            return complex(total)

        keep = ~done
        left = np.concatenate([left[keep], mid[keep]])
        right = np.concatenate([mid[keep], right[keep]])
        f_left = np.concatenate([f_left[keep], f_mid[keep]])
        f_right = np.concatenate([f_mid[keep], f_right[keep]])
        f_mid = np.concatenate([f_lm[keep], f_rm[keep]])
        simpson = np.concatenate([s_left[keep], s_right[keep]])
        budget = np.concatenate([budget[keep] / 2.0, budget[keep] / 2.0])

    raise QuadratureFailure(
        f"adaptive Simpson did not converge to {tol} within "
        f"{MAX_REFINEMENT_LEVELS} refinement levels on [{a}, {b}]"
    )


def overlap_coefficient(params: StateParams, m: int, tol: float = 1e-9) -> complex:
    """<m|state> by direct quadrature of the wavefunction overlap.

    The integration window covers the displaced packets (width ~ e^-r around
    +-sqrt(2) alpha) and the Fock wavefunction's classically allowed region.
    Absolute error is bounded by tol.
    """
    if not 1e-12 <= tol <= 1e-6:
        raise ValueError(f"tol must lie in [1e-12, 1e-6], got {tol}")
    half_width = SQRT2 * abs(params.alpha) + (
        (8.0 + math.sqrt(2.0 * (m + params.n) + 1.0))
        * max(1.0, math.exp(-params.r))
    )

    def integrand(x):
        return fock_wavefunction(m, x) * wavefunction(params, x)

    # Enough seed panels to sample every oscillation of the two packets.
    seed_panels = max(32, 4 * (m + params.n + 2))
    return _adaptive_simpson(integrand, -half_width, half_width, tol,
                             seed_panels=seed_panels)


@dataclass(frozen=True)
class VerificationEntry:
    m: int
    closed: complex
    quadrature: complex
    abs_delta: float


@dataclass(frozen=True)
class VerificationReport:
    """Side-by-side tabulation of closed-form and quadrature coefficients."""

    params: StateParams
    m_max: int
    tol: float
    entries: list[VerificationEntry] = field(default_factory=list)
    closed_error: str | None = None
    quadrature_error: str | None = None

    @property
    def max_delta(self) -> float:
        if not self.entries:
            return math.nan
        return max(e.abs_delta for e in self.entries)

    @property
    def passed(self) -> bool:
        if self.closed_error is not None or self.quadrature_error is not None:
            return False
        return self.max_delta < 10.0 * self.tol


def verify_expansion(params: StateParams, m_max: int, tol: float = 1e-9) -> VerificationReport:
    """Compare both coefficient paths for m = 0..m_max.

    Member errors (singular state, quadrature failure) are recorded in the
    report instead of being raised, so sweeps over parameter lattices can
    keep going.
    """
    entries: list[VerificationEntry] = []
    closed_error = quadrature_error = None
    for m in range(m_max + 1):
        closed = quad = None
        try:
            closed = coefficient(params, m)
        except Exception as exc:  # recorded, not thrown
            closed_error = f"{type(exc).__name__}: {exc}"
        try:
            quad = overlap_coefficient(params, m, tol)
        except Exception as exc:
            quadrature_error = f"{type(exc).__name__}: {exc}"
        if closed_error is not None or quadrature_error is not None:
            break
        entries.append(VerificationEntry(m, closed, quad, abs(closed - quad)))
    return VerificationReport(params=params, m_max=m_max, tol=tol,
                              entries=entries, closed_error=closed_error,
                              quadrature_error=quadrature_error)
