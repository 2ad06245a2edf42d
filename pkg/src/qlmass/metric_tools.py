"""Scalar-curvature identities for radial and warped 3-metrics, checked numerically.

Two metric classes are supported:

* ``RadialThreeMetric``: ``A(r)^2 dr^2 + B(r)^2 g_round``, foliated by round
  spheres;
* ``WarpedFamily``: ``rho(t)^2 dt^2 + f(x, t) gamma(x)`` over a rotationally
  symmetric surface metric ``gamma``.

Both reduce to the foliation formula ``R = -2 dH/dtau + 2K - H^2 - |h|^2``,
with ``tau`` the unit-speed normal parameter and ``|h|^2 = H^2/2`` for leaves
that are umbilic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .numerics import d1, d2, uniform_step
from .surface import RadialProfile, gauss_curvature, laplacian

__all__ = [
    "RadialThreeMetric",
    "WarpedFamily",
    "foliation_scalar_curvature",
    "stretched_scalar_curvature",
    "conformal_laplacian",
    "conformal_scalar",
    "conformal_mean_curvature",
    "collar_scalar_curvature",
    "leaf_quantities",
    "schwarzschild_radial",
    "flat_radial",
    "schwarzschild_family",
    "PositiveCollar",
    "positive_collar",
    "SUITES",
    "verification_report",
]


def _step(grid: np.ndarray, what: str) -> float:
    if grid.ndim != 1 or grid.shape[0] < 6 or not np.all(np.diff(grid) > 0):
        raise errors.GridMismatch("%s must be strictly increasing with at least 6 nodes" % what)
    h = uniform_step(grid)
    if h is None:
        raise errors.GridMismatch("%s must be uniform" % what)
    return h


@dataclass(frozen=True, eq=False)
class RadialThreeMetric:
    r_grid: np.ndarray
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        for name in ("r_grid", "A", "B"):
            object.__setattr__(self, name, np.asarray(getattr(self, name), dtype=float))
        if not (self.r_grid.shape == self.A.shape == self.B.shape):
            raise errors.GridMismatch("r, A, B must have equal lengths")
        _step(self.r_grid, "r grid")
        if np.any(self.A <= 0):
            raise errors.NonPositiveAlpha("A must be positive")
        if np.any(self.B <= 0):
            raise errors.DegenerateLeaf("B must be positive")

    @property
    def h(self) -> float:
        return uniform_step(self.r_grid)


@dataclass(frozen=True, eq=False)
class WarpedFamily:
    """``rho(t)^2 dt^2 + f(x, t) gamma(x)``; ``factor`` has shape ``(base.n, len(t_grid))``."""

    t_grid: np.ndarray
    rho: np.ndarray
    base: RadialProfile
    factor: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t_grid, dtype=float)
        rho = np.asarray(self.rho, dtype=float)
        f = np.asarray(self.factor, dtype=float)
        object.__setattr__(self, "t_grid", t)
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "factor", f)
        _step(t, "t grid")
        if rho.shape != t.shape:
            raise errors.GridMismatch("rho must be sampled on the t grid")
        if f.shape != (self.base.n, t.shape[0]):
            raise errors.GridMismatch("factor must have shape (%d, %d), got %s"
                                      % (self.base.n, t.shape[0], f.shape))
        if np.any(rho <= 0):
            raise errors.NonPositiveAlpha("rho must be positive")
        if np.any(f <= 0):
            raise errors.FactorNonPositive("f must be positive (min %.6g)" % np.min(f))

    @property
    def h(self) -> float:
        return uniform_step(self.t_grid)


def foliation_scalar_curvature(metric: RadialThreeMetric) -> np.ndarray:
    """Scalar curvature of ``A^2 dr^2 + B^2 g_round`` through the foliation formula.

    ``H = 2B'/(AB)``, ``K = 1/B^2``, ``|h|^2 = H^2/2`` and ``d/dtau = (1/A) d/dr``.
    ``H'`` is expanded so only stencils of ``A`` and ``B`` are needed.
    """
    h = metric.h
    A, B = metric.A, metric.B
    A1, B1, B2 = d1(A, h), d1(B, h), d2(B, h)
    H = 2.0 * B1 / (A * B)
    dH = 2.0 * (B2 / (A * B) - B1 * (A1 * B + A * B1) / (A * B) ** 2)
    return -2.0 * dH / A + 2.0 / B**2 - 1.5 * H**2


def stretched_scalar_curvature(base_R, K_t, H_t, rho, t_grid) -> np.ndarray:
    """Scalar curvature after stretching the normal direction by ``rho(t)``.

    ``R/rho^2 + 2K(1 - rho^-2) + 2 rho' H / rho^3``, with ``rho'`` from the
    grid stencil. Leaf arrays may carry extra leading axes; ``t`` is last.
    """
    arrays = [np.asarray(a, dtype=float) for a in (base_R, K_t, H_t)]
    rho = np.asarray(rho, dtype=float)
    t = np.asarray(t_grid, dtype=float)
    if rho.shape != t.shape or any(a.shape[-1] != t.shape[0] for a in arrays):
        raise errors.GridMismatch("leaf samples, rho and t must share the t grid")
    if len({a.shape for a in arrays}) != 1:
        raise errors.GridMismatch("R, K and H samples must have the same shape")
    if np.any(rho <= 0):
        raise errors.NonPositiveAlpha("rho must be positive")
    R, K, H = arrays
    drho = d1(rho, _step(t, "t grid"))
    return R / rho**2 + 2.0 * K * (1.0 - rho**-2) + 2.0 * drho * H / rho**3


def conformal_laplacian(metric: RadialThreeMetric, u) -> np.ndarray:
    """``(1/(A B^2)) d/dr((B^2/A) u')`` expanded into first and second derivatives."""
    u = np.asarray(u, dtype=float)
    if u.shape != metric.r_grid.shape:
        raise errors.GridMismatch("u must be sampled on the r grid")
    h = metric.h
    A, B = metric.A, metric.B
    u1, u2 = d1(u, h), d2(u, h)
    return u2 / A**2 + u1 * (2.0 * d1(B, h) / (A**2 * B) - d1(A, h) / A**3)


def conformal_scalar(metric: RadialThreeMetric, u) -> np.ndarray:
    """Scalar curvature of ``u^4 g``: ``u^-5 (-8 Lap u + R u)``."""
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0):
        raise errors.NonPositiveConformalFactor("u must be positive (min %.6g)" % np.min(u))
    R = foliation_scalar_curvature(metric)
    return (-8.0 * conformal_laplacian(metric, u) + R * u) / u**5


def conformal_mean_curvature(H, u, du_dn):
    """Mean curvature under ``g -> u^4 g``: ``H/u^2 + 4 du_dn / u^3``."""
    u_arr = np.asarray(u, dtype=float)
    if np.any(u_arr <= 0):
        raise errors.NonPositiveConformalFactor("u must be positive")
    out = np.asarray(H, dtype=float) / u_arr**2 + 4.0 * np.asarray(du_dn, dtype=float) / u_arr**3
    return float(out) if np.ndim(out) == 0 else out


def leaf_quantities(family: WarpedFamily):
    """``(K_t, H_t, dH_t/dt)`` on the tensor grid, ``t`` along axis 1.

    ``K_t = (K_gamma - Lap_gamma w)/f`` with ``w = log(f)/2``;
    ``H_t = f_t / (rho f)``.
    """
    f = family.factor
    h = family.h
    w = 0.5 * np.log(f)
    K_gamma = gauss_curvature(family.base)[:, None]
    K_t = (K_gamma - laplacian(family.base, w)) / f
    f_t = d1(f.T, h).T
    H_t = f_t / (family.rho[None, :] * f)
    dH = d1(H_t.T, h).T
    return K_t, H_t, dH


def collar_scalar_curvature(family: WarpedFamily) -> np.ndarray:
    """Scalar curvature of ``rho^2 dt^2 + f gamma`` on the tensor grid ``(x, t)``."""
    K_t, H_t, dH = leaf_quantities(family)
    return -2.0 * dH / family.rho[None, :] + 2.0 * K_t - 1.5 * H_t**2


# -- reference metrics --------------------------------------------------------

def flat_radial(r_grid) -> RadialThreeMetric:
    r = np.asarray(r_grid, dtype=float)
    return RadialThreeMetric(r, np.ones_like(r), r.copy())


def schwarzschild_radial(m: float, r_grid) -> RadialThreeMetric:
    """Isotropic Schwarzschild ``(1 + m/2r)^4 delta``: ``A = u^2``, ``B = r u^2``."""
    r = np.asarray(r_grid, dtype=float)
    u = 1.0 + m / (2.0 * r)
    return RadialThreeMetric(r, u**2, r * u**2)


def schwarzschild_family(m: float, r0: float, depth: float, n_t: int,
                         base: RadialProfile) -> WarpedFamily:
    """Isotropic Schwarzschild shells ``r in [r0 - depth, r0]`` as a warped family.

    ``base`` must be round of areal radius ``R0 = r0 (1 + m/2r0)^2``; with
    ``t = r - r0`` the lapse is ``u^2`` and the factor ``(r u^2 / R0)^2``.
    """
    t = np.linspace(-depth, 0.0, n_t)
    r = r0 + t
    u = 1.0 + m / (2.0 * r)
    R0 = r0 * (1.0 + m / (2.0 * r0)) ** 2
    f = np.tile(((r * u**2) / R0) ** 2, (base.n, 1))
    return WarpedFamily(t, u**2, base, f)


@dataclass(frozen=True, eq=False)
class PositiveCollar:
    sigma: float
    depth: float
    family: WarpedFamily
    min_scalar_curvature: float


def positive_collar(base: RadialProfile, H2, n_t: int = 129, depth=None,
                    max_doublings: int = 40) -> PositiveCollar:
    """Collar ``rho^2 dt^2 + (1 + t H2) gamma`` on ``[-depth, 0]`` with positive scalar curvature.

    ``rho = exp(sigma t)`` satisfies ``rho(0) = 1`` and ``rho' > 0``;
    ``sigma`` starts at 1 and doubles until the grid minimum of ``R`` is positive.
    The default depth keeps ``1 + t H2 >= 1/2``.
    """
    H2 = np.broadcast_to(np.asarray(H2, dtype=float), (base.n,))
    if np.any(H2 <= 0):
        raise errors.InvalidProfile("H2 must be positive")
    if depth is None:
        depth = min(0.5, 0.5 / float(np.max(H2)))
    t = np.linspace(-depth, 0.0, n_t)
    f = 1.0 + t[None, :] * H2[:, None]
    sigma = 1.0
    for _ in range(max_doublings):
        fam = WarpedFamily(t, np.exp(sigma * t), base, f)
        R_min = float(np.min(collar_scalar_curvature(fam)))
        if R_min > 0:
            return PositiveCollar(sigma, depth, fam, R_min)
        sigma *= 2.0
    raise errors.CertificateFailed("no sigma up to 2^%d gives positive scalar curvature"
                                   % max_doublings)


# -- verification suites -----------------------------------------------------

def _max_abs(x) -> float:
    return float(np.max(np.abs(x)))


def _foliation_suite(n: int) -> dict:
    m, lo, hi = 1.0, 1.0, 8.0
    sizes = [max(32, n // 8), max(64, n // 4), max(128, n // 2), n]
    residuals = [_max_abs(foliation_scalar_curvature(schwarzschild_radial(m, np.linspace(lo, hi, k))))
                 for k in sizes]
    # doubling the interval count: (k - 1) -> 2(k - 1)
    conv_sizes = [33, 65, 129, 257]
    conv = [_max_abs(foliation_scalar_curvature(schwarzschild_radial(m, np.linspace(lo, hi, k))))
            for k in conv_sizes]
    r = np.linspace(lo, hi, n)
    return {
        "schwarzschild_m": m,
        "r_interval": [lo, hi],
        "sizes": sizes,
        "residuals": residuals,
        "residual": residuals[-1],
        "convergence_sizes": conv_sizes,
        "convergence_residuals": conv,
        "convergence_ratios": [a / b for a, b in zip(conv, conv[1:])],
        "flat_residual": _max_abs(foliation_scalar_curvature(flat_radial(r))),
        "cylinder_residual": _max_abs(foliation_scalar_curvature(
            RadialThreeMetric(r, np.ones_like(r), np.ones_like(r))) - 2.0),
    }


def _conformal_suite(n: int) -> dict:
    m, r0 = 1.0, 2.0
    r = np.linspace(1.0, 8.0, n)
    flat = flat_radial(r)
    u1 = 1.0 + m / (2.0 * r)
    u2 = 1.0 + 0.1 * r**2
    # composition: (u1 u2)^4 delta versus u2^4 (u1^4 delta), the latter in radial form
    inner = RadialThreeMetric(r, u1**2, r * u1**2)
    composed = conformal_scalar(flat, u1 * u2)
    twice = conformal_scalar(inner, u2)
    u0 = 1.0 + m / (2.0 * r0)
    H_bar = conformal_mean_curvature(2.0 / r0, u0, -m / (2.0 * r0**2))
    from .schwarzschild import mean_curvature
    return {
        "harmonic_residual": _max_abs(conformal_scalar(flat, u1)),
        "identity_residual": _max_abs(conformal_scalar(flat, np.ones_like(r))
                                      - foliation_scalar_curvature(flat)),
        "constant_residual": _max_abs(conformal_scalar(flat, np.full_like(r, 3.0))),
        "composition_residual": _max_abs(composed - twice),
        "mean_curvature": H_bar,
        "mean_curvature_residual": abs(H_bar - mean_curvature(m, r0)),
        "minimal_preserved": conformal_mean_curvature(0.0, u0, 0.0),
    }


def _collar_suite(n: int) -> dict:
    from .generators import round_sphere
    from .schwarzschild import areal_radius
    n_t = max(65, n // 8 + 1)
    unit = round_sphere(1.0, 2.0, max(64, n // 4)).profile
    t = np.linspace(-0.5, 0.0, n_t)
    product = WarpedFamily(t, np.ones_like(t), unit, np.ones((unit.n, n_t)))
    m, r0 = 1.0, 2.0
    sch_base = round_sphere(areal_radius(m, r0), 1.0, max(64, n // 4)).profile
    sch = schwarzschild_family(m, r0, 0.5, n_t, sch_base)
    # x-independent family: stretched-metric formula against the direct evaluator
    ft = (1.0 + 0.6 * t + 0.2 * t**2)[None, :] * np.ones((unit.n, 1))
    rho = np.exp(1.5 * t) + 0.3 * t**2
    plain = WarpedFamily(t, np.ones_like(t), unit, ft)
    stretched = WarpedFamily(t, rho, unit, ft)
    K_t, H_t, _ = leaf_quantities(plain)
    via_formula = stretched_scalar_curvature(collar_scalar_curvature(plain), K_t, H_t, rho, t)
    collar = positive_collar(unit, 1.0, n_t)
    return {
        "product_residual": _max_abs(collar_scalar_curvature(product) - 2.0),
        "schwarzschild_residual": _max_abs(collar_scalar_curvature(sch)),
        "stretched_vs_collar": _max_abs(via_formula - collar_scalar_curvature(stretched)),
        "positive_collar_sigma": collar.sigma,
        "positive_collar_depth": collar.depth,
        "positive_collar_min_R": collar.min_scalar_curvature,
    }


SUITES = {
    "foliation": _foliation_suite,
    "conformal": _conformal_suite,
    "collar": _collar_suite,
}


def verification_report(suite: str = "all", n: int = 1024) -> dict:
    """Residuals and convergence data for one suite or all of them."""
    if suite == "all":
        return {name: run(n) for name, run in SUITES.items()}
    if suite not in SUITES:
        raise errors.InvalidSpec("unknown suite %r (expected foliation, conformal, collar or all)"
                                 % suite)
    return {suite: SUITES[suite](n)}
