"""Position wavefunction and Wigner function of the superposition state.

Units are fixed to omega = hbar = 1.  The Wigner grid lives in the
phase-space convention where a coherent state of amplitude alpha peaks at
(x, y) = (alpha, 0); the position wavefunction lives in the quadrature
convention where the same state is centered at x = sqrt(2) alpha.  The two
axes differ by that factor sqrt(2), and :func:`x_marginal` converts so that
integrating the Wigner function over y reproduces |wavefunction|^2 on the
wavefunction axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .state import StateParams, normalization_constant

SQRT2 = math.sqrt(2.0)

DEFAULT_NODES = 201


@dataclass(frozen=True)
class GridSpec:
    """Rectangular evaluation window for the Wigner function."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int = DEFAULT_NODES
    ny: int = DEFAULT_NODES

    def __post_init__(self):
        if self.x_min >= self.x_max or self.y_min >= self.y_max:
            raise ValueError("grid ranges must be non-empty")
        if self.nx < 2 or self.ny < 2:
            raise ValueError("grid needs at least 2 nodes per axis")


@dataclass(frozen=True)
class WignerGrid:
    """Wigner values on a rectangular grid; values[i, j] = W(x_i, y_j)."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    nx: int
    ny: int
    values: np.ndarray

    def __post_init__(self):
        self.values.setflags(write=False)

    @property
    def xs(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    @property
    def ys(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.ny)


def wavefunction(params: StateParams, x):
    """Position wavefunction of the superposition at x (scalar or array).

    Two Gaussian-Hermite packets centered at +-sqrt(2) alpha, squeezed by
    e^r, weighted 1 and eps, normalized by the closed-form constant.  The
    result is complex; it is real whenever eps is real.
    """
    lam = normalization_constant(params)
    n, r, alpha = params.n, params.r, params.alpha
    eps = params.eps_mod * complex(math.cos(params.eps_phase),
                                   math.sin(params.eps_phase))
    # lambda * e^(r/2) / sqrt(2^n n!) / pi^(1/4), in log space against large n
    log_pref = 0.5 * r - 0.5 * (n * math.log(2.0) + specfun.log_factorial(n)) \
        - 0.25 * math.log(math.pi)
    pref = lam * math.exp(log_pref)

    x = np.asarray(x, dtype=float)
    e_r = math.exp(r)
    u_minus = x - SQRT2 * alpha
    u_plus = x + SQRT2 * alpha
    packet_minus = np.exp(-0.5 * (e_r * u_minus) ** 2) * specfun.hermite(n, e_r * u_minus)
    packet_plus = np.exp(-0.5 * (e_r * u_plus) ** 2) * specfun.hermite(n, e_r * u_plus)
    result = pref * (packet_minus + eps * packet_plus)
    if result.ndim == 0:
        return complex(result)
    return result.astype(complex)


def default_grid(params: StateParams, nx: int = DEFAULT_NODES,
                 ny: int = DEFAULT_NODES) -> GridSpec:
    """Envelope covering 4 sigma of every Gaussian factor of the Wigner function."""
    half_x = abs(params.alpha) + 4.0 * max(1.0, math.exp(-params.r))
    half_y = 4.0 * max(1.0, math.exp(params.r))
    spec = GridSpec(-half_x, half_x, -half_y, half_y, nx=nx, ny=ny)
    return _with_fringe_floor(spec, params)


def _with_fringe_floor(spec: GridSpec, params: StateParams) -> GridSpec:
    """Bump ny so the cos(4 y alpha) fringes are resolved (period/8 sampling)."""
    floor = math.ceil(8.0 * (spec.y_max - spec.y_min) * abs(params.alpha) / math.pi)
    if spec.ny >= floor:
        return spec
    return GridSpec(spec.x_min, spec.x_max, spec.y_min, spec.y_max,
                    nx=spec.nx, ny=floor)


def wigner_grid(params: StateParams, grid: GridSpec | None = None) -> WignerGrid:
    """Wigner function on a rectangular grid, real-valued by construction.

    The three contributions are the two displaced squeezed packets at
    x = -+alpha and the interference fringe term modulated by
    cos(4 y alpha - phase(eps)).
    """
    lam = normalization_constant(params)
    if grid is None:
        grid = default_grid(params)
    else:
        grid = _with_fringe_floor(grid, params)

    n, r, alpha = params.n, params.r, params.alpha
    eps_mod, phi = params.eps_mod, params.eps_phase
    xs = np.linspace(grid.x_min, grid.x_max, grid.nx)
    ys = np.linspace(grid.y_min, grid.y_max, grid.ny)
    X, Y = np.meshgrid(xs, ys, indexing="ij")

    e2r = math.exp(2.0 * r)
    y_part = (Y * Y) * math.exp(-2.0 * r)

    def packet(center: float) -> np.ndarray:
        u = y_part + e2r * (X - center) ** 2
        return np.exp(-2.0 * u) * specfun.laguerre(n, 4.0 * u)

    common = 2.0 * (-1.0) ** (n % 2) * lam * lam / math.pi
    values = packet(alpha)
    if eps_mod != 0.0:
        values = values + eps_mod ** 2 * packet(-alpha)
        values = values + 2.0 * eps_mod * packet(0.0) * np.cos(4.0 * Y * alpha - phi)
    values = common * values

    return WignerGrid(grid.x_min, grid.x_max, grid.y_min, grid.y_max,
                      grid.nx, grid.ny, values)


def x_marginal(grid: WignerGrid) -> tuple[np.ndarray, np.ndarray]:
    """Position density obtained by integrating the Wigner grid over y.

    Returns (x, density) on the wavefunction axis: the grid's x is scaled by
    sqrt(2) and the density by 1/sqrt(2), so density matches
    |wavefunction(x)|^2 pointwise and integrates to one.
    """
    ys = grid.ys
    density = np.trapz(grid.values, ys, axis=1)
    return SQRT2 * grid.xs, density / SQRT2


def total_mass(grid: WignerGrid) -> float:
    """Double trapezoidal integral of the grid; 1 when the envelope is covered."""
    inner = np.trapz(grid.values, grid.ys, axis=1)
    return float(np.trapz(inner, grid.xs))
