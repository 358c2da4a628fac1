"""Special functions and log-space prefactor arithmetic.

Everything here is a plain three-term recurrence evaluated in double
precision.  Factorials and power prefactors that would overflow are kept in
signed-log form (:class:`SignedLogValue`) and only combined with the
polynomial values at the point of use.

All evaluators accept scalars or numpy arrays for the argument and are pure
functions; the log-factorial cache grows append-only under a lock.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np

from .errors import DegreeTooLarge

DEFAULT_MAX_DEGREE = 512


def _check_degree(k: int, max_degree: int) -> None:
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    if k > max_degree:
        raise DegreeTooLarge(
            f"degree {k} exceeds cap {max_degree}; values would overflow double range"
        )


def hermite(k: int, x, max_degree: int = DEFAULT_MAX_DEGREE):
    """Physicists' Hermite polynomial H_k(x).

    Uses H_{k+1} = 2x H_k - 2k H_{k-1} with H_0 = 1, H_1 = 2x.  Values grow
    roughly like sqrt(k!) 2^(k/2) e^(x^2/2); callers must compensate with
    log-space prefactors, not here.
    """
    _check_degree(k, max_degree)
    if k == 0:
        return np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    h_prev = np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    h = 2.0 * np.asarray(x, dtype=float) if np.ndim(x) else 2.0 * x
    for j in range(1, k):
        h, h_prev = 2.0 * x * h - 2.0 * j * h_prev, h
    return h


def hermite_imag_scaled(k: int, z, max_degree: int = DEFAULT_MAX_DEGREE):
    """Real-valued G_k(z) := (-i)^k H_k(iz).

    Satisfies G_{k+1} = 2z G_k + 2k G_{k-1}, G_0 = 1, G_1 = 2z, so the
    purely imaginary-argument Hermite factor H_k(iz) = i^k G_k(z) never
    leaves real arithmetic.  All recurrence coefficients are positive, so
    there is no cancellation for z >= 0.
    """
    _check_degree(k, max_degree)
    if k == 0:
        return np.ones_like(z, dtype=float) if np.ndim(z) else 1.0
    g_prev = np.ones_like(z, dtype=float) if np.ndim(z) else 1.0
    g = 2.0 * np.asarray(z, dtype=float) if np.ndim(z) else 2.0 * z
    for j in range(1, k):
        g, g_prev = 2.0 * z * g + 2.0 * j * g_prev, g
    return g


def laguerre(k: int, x, max_degree: int = DEFAULT_MAX_DEGREE):
    """Laguerre polynomial L_k(x) via (k+1)L_{k+1} = (2k+1-x)L_k - k L_{k-1}."""
    _check_degree(k, max_degree)
    if k == 0:
        return np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    l_prev = np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    l = 1.0 - x
    for j in range(1, k):
        l, l_prev = ((2.0 * j + 1.0 - x) * l - j * l_prev) / (j + 1.0), l
    return l


def assoc_laguerre(k: int, a: int, x, max_degree: int = DEFAULT_MAX_DEGREE):
    """Associated Laguerre polynomial L_k^a(x).

    Recurrence in k at fixed order a:
    (k+1) L_{k+1}^a = (2k+1+a-x) L_k^a - (k+a) L_{k-1}^a.
    L_k^0 coincides with :func:`laguerre`.
    """
    if a < 0:
        raise ValueError(f"associated order must be non-negative, got {a}")
    _check_degree(k, max_degree)
    _check_degree(a, max_degree)
    if k == 0:
        return np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    l_prev = np.ones_like(x, dtype=float) if np.ndim(x) else 1.0
    l = 1.0 + a - x
    for j in range(1, k):
        l, l_prev = ((2.0 * j + 1.0 + a - x) * l - (j + a) * l_prev) / (j + 1.0), l
    return l


# Cumulative table of ln(k!); grown lazily, append-only.
_LOG_FACTORIAL_CACHE = [0.0, 0.0]
_LOG_FACTORIAL_LOCK = threading.Lock()


def log_factorial(k: int) -> float:
    """ln(k!) by cumulative summation with a cached table."""
    if k < 0:
        raise ValueError(f"factorial argument must be non-negative, got {k}")
    if k >= len(_LOG_FACTORIAL_CACHE):
        with _LOG_FACTORIAL_LOCK:
            while len(_LOG_FACTORIAL_CACHE) <= k:
                i = len(_LOG_FACTORIAL_CACHE)
                _LOG_FACTORIAL_CACHE.append(_LOG_FACTORIAL_CACHE[-1] + math.log(i))
    return _LOG_FACTORIAL_CACHE[k]


@dataclass(frozen=True)
class SignedLogValue:
    """A real number stored as sign * exp(log_magnitude).

    Products and ratios compose by sign multiplication and log
    addition/subtraction, which keeps factorial/power prefactors finite far
    beyond double range.  ``log_magnitude`` is meaningless when sign == 0.
    """

    sign: int
    log_magnitude: float

    @classmethod
    def from_real(cls, v: float) -> "SignedLogValue":
        if v == 0.0:
            return cls(0, 0.0)
        return cls(1 if v > 0 else -1, math.log(abs(v)))

    @classmethod
    def from_log(cls, sign: int, log_magnitude: float) -> "SignedLogValue":
        if sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {sign}")
        return cls(sign, log_magnitude if sign != 0 else 0.0)

    def to_real(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def __mul__(self, other: "SignedLogValue") -> "SignedLogValue":
        if self.sign == 0 or other.sign == 0:
            return SignedLogValue(0, 0.0)
        return SignedLogValue(self.sign * other.sign,
                              self.log_magnitude + other.log_magnitude)

    def __truediv__(self, other: "SignedLogValue") -> "SignedLogValue":
        if other.sign == 0:
            raise ZeroDivisionError("division by zero SignedLogValue")
        if self.sign == 0:
            return SignedLogValue(0, 0.0)
        return SignedLogValue(self.sign * other.sign,
                              self.log_magnitude - other.log_magnitude)

    def scaled_real(self, log_offset: float) -> float:
        """sign * exp(log_magnitude + log_offset); used to sum terms under a common scale."""
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_magnitude + log_offset)
