"""Superposition state definition and Fock-basis coefficient engine.

The state is the normalized superposition of two squeezed displaced number
states, displaced by +alpha and -alpha with relative weight eps.  Its Fock
coefficients C_m = <m|state> have a closed form whose factorial and power
prefactors are assembled in signed-log space; the polynomial factors come
from :mod:`pbphase.specfun`.  At r = 0 the closed form degenerates into a
displaced-Fock-state expression evaluated through associated Laguerre
polynomials; the branch switch sits at R_SWITCH.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import specfun
from .errors import SingularState, TruncationFailure
from .specfun import DEFAULT_MAX_DEGREE, SignedLogValue, log_factorial

# Below this squeeze parameter the 1/sqrt(sinh 2r) factors are numerically
# singular and the r -> 0 limit formula takes over.
R_SWITCH = 1e-8

DEFAULT_TOL_NORM = 1e-10
DEFAULT_TOL_SINGULAR = 1e-12


@dataclass(frozen=True)
class StateParams:
    """Parameters (n, alpha, r, eps) of the superposition state.

    eps is stored as modulus and phase; the coefficient engine only supports
    real eps (phase 0 or pi), matching the real-alpha restriction.
    """

    n: int
    alpha: float
    r: float
    eps_mod: float = 0.0
    eps_phase: float = 0.0

    def __post_init__(self):
        if self.n < 0 or self.n != int(self.n):
            raise ValueError(f"n must be a non-negative integer, got {self.n}")
        if self.r < 0.0:
            raise ValueError(f"r must be >= 0, got {self.r}")
        if self.eps_mod < 0.0:
            raise ValueError(f"eps_mod must be >= 0, got {self.eps_mod}")
        if not 0.0 <= self.eps_phase < 2.0 * math.pi:
            raise ValueError(f"eps_phase must lie in [0, 2pi), got {self.eps_phase}")

    @classmethod
    def from_real_eps(cls, n: int, alpha: float, r: float, eps: float) -> "StateParams":
        """Build params from a signed real eps (negative eps -> phase pi)."""
        if eps >= 0.0:
            return cls(n=n, alpha=alpha, r=r, eps_mod=eps, eps_phase=0.0)
        return cls(n=n, alpha=alpha, r=r, eps_mod=-eps, eps_phase=math.pi)

    @property
    def t(self) -> float:
        """Displacement seen by the normalization overlap, alpha cosh r + alpha sinh r."""
        return self.alpha * math.cosh(self.r) + self.alpha * math.sinh(self.r)

    @property
    def tau(self) -> float:
        """Scaled displacement alpha e^r; equals t for real alpha."""
        return self.alpha * math.exp(self.r)

    @property
    def has_real_eps(self) -> bool:
        return self.eps_mod == 0.0 or self.eps_phase in (0.0, math.pi)

    @property
    def eps_real(self) -> float:
        """Signed real eps; only meaningful when has_real_eps."""
        if not self.has_real_eps:
            raise ValueError("eps is not real (phase not 0 or pi)")
        return self.eps_mod * math.cos(self.eps_phase)


@dataclass(frozen=True)
class FockExpansion:
    """Truncated, renormalized Fock expansion of a state.

    coefficients[m] is C_m for m = 0..cutoff; tail_mass estimates the
    discarded probability beyond the cutoff.
    """

    coefficients: np.ndarray
    cutoff: int
    tail_mass: float
    params: StateParams = field(repr=False)

    def __post_init__(self):
        self.coefficients.setflags(write=False)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.coefficients) ** 2


def normalization_constant(params: StateParams,
                           tol_singular: float = DEFAULT_TOL_SINGULAR) -> float:
    """Positive normalization constant of the superposition.

    The inverse square is 1 + |eps|^2 + 2|eps| exp(-2 t^2) L_n(4 t^2) cos(phase);
    a non-positive value (odd case at alpha = 0) raises SingularState.
    """
    t2 = params.t * params.t
    inv = 1.0 + params.eps_mod ** 2 + (
        2.0 * params.eps_mod * math.exp(-2.0 * t2)
        * specfun.laguerre(params.n, 4.0 * t2)
        * math.cos(params.eps_phase)
    )
    if inv <= tol_singular:
        raise SingularState(
            f"superposition norm vanishes for n={params.n}, alpha={params.alpha}, "
            f"r={params.r}, eps={params.eps_mod}*exp(i*{params.eps_phase})"
        )
    return 1.0 / math.sqrt(inv)


def _parity_factor(params: StateParams, m: int) -> float:
    """1 + (-1)^(n+m) eps; exactly zero for the forbidden parity at |eps| = 1."""
    if params.eps_mod == 0.0:
        return 1.0
    return 1.0 + (-1.0) ** ((params.n + m) % 2) * params.eps_real


def _unnormalized_coefficient_squeezed(params: StateParams, m: int,
                                       max_degree: int) -> float:
    """Closed-form <m|state>/lambda for r > R_SWITCH, parity factor excluded.

    Every half-integer power of -tanh(r)/2 is folded into the real factor
    (-1)^(n-j) (tanh r / 2)^((n-j)/2) G_{n-j}(z) with z = alpha/sqrt(sinh 2r),
    so the whole sum is real arithmetic.
    """
    n, r = params.n, params.r
    alpha, tau = params.alpha, params.tau
    sinh2r = math.sinh(2.0 * r)
    z = alpha / math.sqrt(sinh2r)
    w = tau / math.sqrt(sinh2r)
    log_th = math.log(math.tanh(r)) - math.log(2.0)  # ln(tanh r / 2)
    log_global = (
        0.5 * m * log_th
        - 0.5 * (log_factorial(n) + log_factorial(m) + math.log(math.cosh(r)))
        + 0.5 * tau * tau * (math.tanh(r) - 1.0)
    )

    terms = []
    for j in range(min(m, n) + 1):
        g = specfun.hermite_imag_scaled(n - j, z, max_degree)
        h = specfun.hermite(m - j, w, max_degree)
        if g == 0.0 or h == 0.0:
            continue
        log_mag = (
            log_factorial(n) + log_factorial(m)
            - log_factorial(j) - log_factorial(n - j) - log_factorial(m - j)
            + j * (math.log(2.0) - 0.5 * math.log(sinh2r))
            + 0.5 * (n - j) * log_th
            + math.log(abs(g)) + math.log(abs(h))
        )
        sign = (1 if (n - j) % 2 == 0 else -1)
        sign *= (1 if g > 0 else -1) * (1 if h > 0 else -1)
        terms.append(SignedLogValue.from_log(sign, log_mag))

    if not terms:
        return 0.0
    # Scale by the largest term, then add in descending magnitude so the
    # relative error stays bounded under cancellation.
    log_max = max(t.log_magnitude for t in terms)
    scaled = sorted((t.scaled_real(-log_max) for t in terms), key=abs, reverse=True)
    total = 0.0
    for v in scaled:
        total += v
    return total * math.exp(log_max + log_global)


def _unnormalized_coefficient_displaced(params: StateParams, m: int,
                                        max_degree: int) -> float:
    """r = 0 limit: <m|state>/lambda through associated Laguerre polynomials."""
    n, alpha = params.n, params.alpha
    p, q = min(n, m), max(n, m)
    if alpha == 0.0:
        return 1.0 if m == n else 0.0
    lag = specfun.assoc_laguerre(p, q - p, alpha * alpha, max_degree)
    if lag == 0.0:
        return 0.0
    log_mag = (
        0.5 * (log_factorial(p) - log_factorial(q))
        + (n + m - 2 * p) * math.log(abs(alpha))
        - 0.5 * alpha * alpha
        + math.log(abs(lag))
    )
    sign = (1 if (n - p) % 2 == 0 else -1)
    if alpha < 0.0 and (n + m) % 2 == 1:  # n+m-2p has the parity of n+m
        sign = -sign
    if lag < 0.0:
        sign = -sign
    return sign * math.exp(log_mag)


def _require_real_eps(params: StateParams) -> None:
    if not params.has_real_eps:
        raise ValueError(
            "the coefficient engine supports real eps only (eps_phase 0 or pi); "
            f"got eps_phase={params.eps_phase}"
        )


def unnormalized_coefficient(params: StateParams, m: int,
                             max_degree: int = DEFAULT_MAX_DEGREE) -> float:
    """<m|state>/lambda, real by construction for real alpha and eps."""
    _require_real_eps(params)
    pf = _parity_factor(params, m)
    if pf == 0.0:
        return 0.0
    if params.r > R_SWITCH:
        core = _unnormalized_coefficient_squeezed(params, m, max_degree)
    else:
        core = _unnormalized_coefficient_displaced(params, m, max_degree)
    return core * pf


def coefficient(params: StateParams, m: int,
                max_degree: int = DEFAULT_MAX_DEGREE) -> complex:
    """Fock coefficient C_m = <m|state>, normalized with the closed-form constant."""
    lam = normalization_constant(params)
    return complex(lam * unnormalized_coefficient(params, m, max_degree), 0.0)


def _initial_cutoff(params: StateParams) -> int:
    envelope = math.ceil((abs(params.alpha) * math.exp(params.r) + 4.0) ** 2) + 16
    return max(4 * params.n, envelope, 32)


def expand(params: StateParams, tol_norm: float = DEFAULT_TOL_NORM,
           max_degree: int = DEFAULT_MAX_DEGREE) -> FockExpansion:
    """Adaptively truncated, unit-norm Fock expansion.

    The cutoff starts at the Gaussian-envelope estimate and doubles until the
    probability carried by the eight highest coefficients falls below
    tol_norm/100 and the total probability agrees with the closed-form
    normalization to tol_norm.  The final vector is renormalized so that
    downstream sums are exactly unit-norm regardless of truncation error.
    """
    if not 0.0 < tol_norm <= 1e-4:
        raise ValueError(f"tol_norm must lie in (0, 1e-4], got {tol_norm}")
    lam = normalization_constant(params)
    _require_real_eps(params)

    cutoff = _initial_cutoff(params)
    while True:
        if cutoff > max_degree:
            raise TruncationFailure(
                f"cutoff {cutoff} exceeds degree cap {max_degree} before the "
                f"norm converged (params: {params})"
            )
        values = np.array(
            [lam * unnormalized_coefficient(params, m, max_degree)
             for m in range(cutoff + 1)]
        )
        probs = values * values
        norm = float(np.sum(probs))
        top_mass = float(np.sum(probs[-8:]))
        if top_mass < tol_norm * 1e-2 and abs(norm - 1.0) <= tol_norm:
            break
        cutoff *= 2

    coeffs = (values / math.sqrt(norm)).astype(complex)
    tail_mass = max(0.0, 1.0 - norm)
    return FockExpansion(coefficients=coeffs, cutoff=cutoff,
                         tail_mass=tail_mass, params=params)
