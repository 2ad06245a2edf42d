"""Discretised rotationally symmetric Bartnik data.

A 2-sphere with metric of revolution ``alpha(t)^2 dt^2 + beta(t)^2 dphi^2``
(``t`` in ``[0, L]``, poles at both ends) together with a rotationally
symmetric mean curvature ``H(t)``. Everything downstream works on a uniform
``t`` grid; non-uniform input is resampled at construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import PchipInterpolator

from . import errors
from .numerics import EVEN, ODD, d1, odd_quotient, pole_odd_integral, uniform_step

__all__ = [
    "POLE_TOL",
    "ROUND_TOL",
    "MIN_SAMPLES",
    "RadialProfile",
    "BartnikData",
    "GeometryReport",
    "structural_problems",
    "gauss_curvature",
    "laplacian",
    "area",
    "integrate_scalar",
    "validate",
    "scale_H",
    "scale_lengths",
]

POLE_TOL = 1e-6
ROUND_TOL = 1e-8
MIN_SAMPLES = 16


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class RadialProfile:
    """Samples of ``alpha``, ``beta`` and ``H`` on a strictly increasing grid.

    Arrays are copied and made read-only. A non-uniform grid is replaced by the
    uniform grid with the same endpoints and sample count, each field being
    resampled with a monotone cubic (PCHIP) interpolant.
    """

    t_grid: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    H: np.ndarray
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        arrays = [np.asarray(a, dtype=float) for a in (self.t_grid, self.alpha, self.beta, self.H)]
        if any(a.ndim != 1 for a in arrays):
            raise errors.GridMismatch("profile samples must be 1-D arrays")
        n = arrays[0].shape[0]
        if any(a.shape[0] != n for a in arrays):
            raise errors.GridMismatch(
                "t, alpha, beta, H lengths differ: %s" % [a.shape[0] for a in arrays])
        if not all(np.all(np.isfinite(a)) for a in arrays):
            raise errors.InvalidProfile("profile samples must be finite")
        t = arrays[0]
        if n >= 2 and np.all(np.diff(t) > 0) and uniform_step(t) is None:
            tu = np.linspace(t[0], t[-1], n)
            arrays = [tu] + [PchipInterpolator(t, a)(tu) for a in arrays[1:]]
        for name, a in zip(("t_grid", "alpha", "beta", "H"), arrays):
            object.__setattr__(self, name, _frozen(a))

    @property
    def n(self) -> int:
        return int(self.t_grid.shape[0])

    @property
    def h(self) -> float:
        return float((self.t_grid[-1] - self.t_grid[0]) / (self.n - 1))

    @property
    def beta_closed(self) -> np.ndarray:
        """``beta`` with the pole samples set to exactly zero.

        Odd reflection across a pole assumes ``beta(pole) = 0``; a residual
        like ``sin(pi) ~ 1e-16`` would otherwise leak into second derivatives.
        """
        if "beta_closed" not in self._cache:
            b = np.array(self.beta)
            b[0] = b[-1] = 0.0
            b.setflags(write=False)
            self._cache["beta_closed"] = b
        return self._cache["beta_closed"]

    def with_H(self, H) -> "RadialProfile":
        """Same metric, new mean curvature. Shares cached metric quantities."""
        out = RadialProfile(self.t_grid, self.alpha, self.beta, H)
        for key in ("K", "embedding", "area", "beta_closed"):
            if key in self._cache:
                out._cache[key] = self._cache[key]
        return out


@dataclass(frozen=True, eq=False)
class BartnikData:
    profile: RadialProfile
    label: str = ""
    provenance: str = "file"

    def scaled(self, lam: float) -> "BartnikData":
        return scale_H(self, lam)


@dataclass(frozen=True)
class GeometryReport:
    area: float
    K_min: float
    K_max: float
    H_min: float
    H_max: float
    areal_radius: float
    is_round: bool
    roundness_residual: float
    is_constant_H: bool
    constant_H_residual: float
    diagnostics: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def as_dict(self) -> dict:
        return {
            "area": self.area,
            "K_min": self.K_min,
            "K_max": self.K_max,
            "H_min": self.H_min,
            "H_max": self.H_max,
            "areal_radius": self.areal_radius,
            "is_round": self.is_round,
            "roundness_residual": self.roundness_residual,
            "is_constant_H": self.is_constant_H,
            "constant_H_residual": self.constant_H_residual,
            "diagnostics": list(self.diagnostics),
        }


def _pole_slopes(p: RadialProfile) -> tuple:
    db = d1(p.beta_closed, p.h, ODD)
    return db[0] / p.alpha[0], db[-1] / p.alpha[-1]


def structural_problems(p: RadialProfile, pole_tol: float = POLE_TOL) -> list:
    """Violations of the grid / positivity / pole-closure invariants (no curvature)."""
    out = []
    if p.n < MIN_SAMPLES:
        out.append("N=%d < %d samples" % (p.n, MIN_SAMPLES))
    if p.n >= 2 and not np.all(np.diff(p.t_grid) > 0):
        out.append("t grid is not strictly increasing")
    if np.any(p.alpha <= 0):
        out.append("alpha <= 0 at %d node(s)" % int(np.sum(p.alpha <= 0)))
    if out:
        return out
    scale = float(np.max(np.abs(p.beta))) or 1.0
    if abs(p.beta[0]) > pole_tol * scale or abs(p.beta[-1]) > pole_tol * scale:
        out.append("beta does not vanish at the poles (beta(0)=%.3g, beta(L)=%.3g)"
                   % (p.beta[0], p.beta[-1]))
    s0, s1 = _pole_slopes(p)
    if abs(s0 - 1.0) > pole_tol or abs(s1 + 1.0) > pole_tol:
        out.append("pole closure beta'/alpha = (%.12g, %.12g), expected (1, -1)" % (s0, s1))
    if np.any(p.beta[1:-1] <= 0):
        out.append("beta <= 0 on the interior")
    if np.any(p.H <= 0):
        out.append("H <= 0 at %d node(s)" % int(np.sum(p.H <= 0)))
    return out


def _require_metric(p: RadialProfile) -> None:
    if p.n < 6:
        raise errors.InvalidProfile("too few samples (%d)" % p.n)
    if np.any(p.alpha <= 0):
        raise errors.NonPositiveAlpha("alpha must be positive everywhere")
    if not np.all(np.diff(p.t_grid) > 0):
        raise errors.InvalidProfile("t grid is not strictly increasing")
    scale = float(np.max(np.abs(p.beta))) or 1.0
    s0, s1 = _pole_slopes(p)
    if (abs(p.beta[0]) > POLE_TOL * scale or abs(p.beta[-1]) > POLE_TOL * scale
            or abs(s0 - 1.0) > POLE_TOL or abs(s1 + 1.0) > POLE_TOL):
        raise errors.NonClosedPole(
            "pole closure failed: beta'/alpha = (%.12g, %.12g)" % (s0, s1))


def gauss_curvature(p: RadialProfile) -> np.ndarray:
    """``K = -(1/(alpha beta)) d/dt(beta'/alpha)``, pole values by L'Hopital."""
    if "K" in p._cache:
        return p._cache["K"]
    _require_metric(p)
    h = p.h
    b = p.beta_closed
    q = d1(b, h, ODD) / p.alpha               # even
    K = -odd_quotient(d1(q, h, EVEN), p.alpha * b, h)
    K.setflags(write=False)
    p._cache["K"] = K
    return K


def laplacian(p: RadialProfile, f) -> np.ndarray:
    """Laplace-Beltrami of a rotationally symmetric function.

    ``(1/(alpha beta)) d/dt((beta/alpha) f')``; ``f`` must be smooth across
    the poles (even in ``t``).
    """
    f = np.asarray(f, dtype=float)
    if f.shape[0] != p.n:
        raise errors.GridMismatch("f has %d samples, profile has %d" % (f.shape[0], p.n))
    h = p.h
    shape = (-1,) + (1,) * (f.ndim - 1)
    a = p.alpha.reshape(shape)
    b = p.beta_closed.reshape(shape)
    flux = (b / a) * d1(f, h, EVEN)            # odd * odd = even
    return odd_quotient(d1(flux, h, EVEN), a * b * np.ones_like(f), h)


def integrate_scalar(p: RadialProfile, f) -> float:
    """``int_Sigma f dA = int 2 pi f beta alpha dt``.

    The integrand vanishes at both poles and is odd across them, so the
    end-corrected trapezoid rule of :func:`pole_odd_integral` applies.
    """
    f = np.asarray(f, dtype=float)
    if f.shape != p.t_grid.shape:
        raise errors.GridMismatch("f has %d samples, profile has %d" % (f.size, p.n))
    return pole_odd_integral(2.0 * math.pi * (f * p.beta_closed * p.alpha), p.h)


def area(p: RadialProfile) -> float:
    if "area" not in p._cache:
        p._cache["area"] = integrate_scalar(p, np.ones(p.n))
    return p._cache["area"]


def _relative_spread(x: np.ndarray) -> float:
    mean = float(np.mean(x))
    if mean == 0.0:
        return math.inf
    return float((np.max(x) - np.min(x)) / abs(mean))


def validate(data: BartnikData, pole_tol: float = POLE_TOL,
             round_tol: float = ROUND_TOL) -> GeometryReport:
    """Geometry summary plus every violated invariant, collected rather than raised."""
    p = data.profile if isinstance(data, BartnikData) else data
    problems = structural_problems(p, pole_tol)
    nan = math.nan
    A = K_min = K_max = nan
    r_res = nan
    if p.n >= 6 and np.all(p.alpha > 0) and np.all(np.diff(p.t_grid) > 0):
        A = area(p)
        try:
            K = gauss_curvature(p)
        except errors.QLMassError:
            K = None  # already reported as a pole-closure problem
        if K is not None:
            K_min, K_max = float(np.min(K)), float(np.max(K))
            r_res = _relative_spread(K)
            if K_min <= 0:
                problems.append("Gauss curvature not positive (K_min=%.6g)" % K_min)
    if not (A > 0):
        if not problems:
            problems.append("non-positive area")
    h_res = _relative_spread(p.H)
    R = math.sqrt(A / (4.0 * math.pi)) if A > 0 else nan
    return GeometryReport(
        area=A, K_min=K_min, K_max=K_max,
        H_min=float(np.min(p.H)), H_max=float(np.max(p.H)),
        areal_radius=R,
        is_round=bool(r_res <= round_tol), roundness_residual=r_res,
        is_constant_H=bool(h_res <= round_tol), constant_H_residual=h_res,
        diagnostics=tuple(problems),
    )


def scale_H(data: BartnikData, lam: float) -> BartnikData:
    """Replace ``H`` by ``lam * H`` (metric untouched)."""
    if not (lam > 0) or not math.isfinite(lam):
        raise errors.NonPositiveLambda("lambda must be a positive finite number, got %r" % lam)
    p = data.profile
    return BartnikData(p.with_H(lam * p.H), data.label, data.provenance)


def scale_lengths(data: BartnikData, s: float) -> BartnikData:
    """Homothety by ``s``: ``gamma -> s^2 gamma``, ``H -> H/s``."""
    p = data.profile
    q = RadialProfile(p.t_grid, s * p.alpha, s * p.beta, p.H / s)
    return BartnikData(q, data.label, data.provenance)
