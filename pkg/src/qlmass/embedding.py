"""Isometric embedding of a metric of revolution as a surface of revolution in R^3.

For ``alpha^2 dt^2 + beta^2 dphi^2`` the profile curve is ``rho = beta`` and
``z' = sqrt(alpha^2 - beta'^2)``, so the Weyl problem reduces to one
quadrature. ``H0`` is the Euclidean mean curvature with the outward normal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import errors
from .numerics import EVEN, ODD, cumulative_integral, d1, d2, odd_quotient
from .surface import BartnikData, RadialProfile, gauss_curvature, integrate_scalar, area

__all__ = [
    "EMBED_TOL",
    "EmbeddedProfile",
    "embed_revolution",
    "euclidean_mean_curvature",
    "principal_curvatures",
    "minkowski_residual",
    "total_mean_curvature",
    "h0_for",
]

# allowed negative excess of beta'^2 over alpha^2, relative to max alpha^2
EMBED_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class EmbeddedProfile:
    t_grid: np.ndarray
    rho: np.ndarray
    z: np.ndarray
    H0: np.ndarray
    source: RadialProfile
    metric_residual: float

    @property
    def h(self) -> float:
        return self.source.h

    def csv_rows(self):
        yield ("t", "rho", "z", "H0")
        for row in zip(self.t_grid, self.rho, self.z, self.H0):
            yield tuple(float(x) for x in row)


def _profile(obj) -> RadialProfile:
    return obj.profile if isinstance(obj, BartnikData) else obj


def embed_revolution(data) -> EmbeddedProfile:
    """Embed the metric of ``data`` (profile or BartnikData); cached per metric."""
    p = _profile(data)
    cached = p._cache.get("embedding")
    if cached is not None:
        return cached

    K = gauss_curvature(p)
    if np.min(K) <= 0:
        raise errors.NotEmbeddableAsRevolution(
            "Gauss curvature must be positive (min K = %.6g)" % np.min(K))
    h = p.h
    rho = p.beta_closed
    drho = d1(rho, h, ODD)
    slope2 = p.alpha**2 - drho**2
    scale = float(np.max(p.alpha**2))
    if np.min(slope2) < -EMBED_TOL * scale:
        i = int(np.argmin(slope2))
        raise errors.NotEmbeddableAsRevolution(
            "alpha^2 - beta'^2 = %.3g < 0 at t=%.6g" % (slope2[i], p.t_grid[i]))
    # z' = alpha sqrt(1 - q^2), q = beta'/alpha. Near a pole 1 - q^2 = O(t^2)
    # and forming it by subtraction loses the leading digits, so use the
    # polar-cap Gauss-Bonnet identities 1 - q(t) = int_0^t K alpha beta and
    # 1 + q(t) = int_t^L K alpha beta instead.
    kab = K * p.alpha * rho
    cap_south = cumulative_integral(kab, h, ODD)
    cap_north = cumulative_integral(kab[::-1], h, ODD)[::-1]
    dz = p.alpha * np.sqrt(np.clip(cap_south * cap_north, 0.0, None))
    dz[0] = dz[-1] = 0.0
    z = cumulative_integral(dz, h, ODD)

    zp = d1(z, h, EVEN)
    resid = float(np.max(np.abs(drho**2 + zp**2 - p.alpha**2)) / scale)
    # Parallel curvature k2 = z'/(alpha rho) and meridian curvature k1 = K/k2
    # (Gauss equation). This avoids differentiating z twice, whose roundoff
    # grows like eps/h^2.
    k2 = odd_quotient(dz / p.alpha, rho, h)
    if np.min(k2) <= 0:
        raise errors.PoleSingularity("profile curve is not a graph over the axis")
    H0 = K / k2 + k2
    H0.setflags(write=False)
    emb = EmbeddedProfile(p.t_grid, rho, z, H0, p, resid)
    if np.min(H0) <= 0:
        raise errors.PoleSingularity("non-positive Euclidean mean curvature (min %.6g)" % np.min(H0))
    p._cache["embedding"] = emb
    return emb


def principal_curvatures(emb: EmbeddedProfile) -> tuple:
    """Meridian and parallel curvatures ``(k1, k2)`` w.r.t. the outward normal."""
    h = emb.h
    r1 = d1(emb.rho, h, ODD)
    r2 = d2(emb.rho, h, ODD)
    z1 = d1(emb.z, h, EVEN)
    z2 = d2(emb.z, h, EVEN)
    speed2 = r1**2 + z1**2
    if np.min(speed2) <= 0:
        raise errors.DegenerateProfile("profile curve has zero speed")
    speed = np.sqrt(speed2)
    k1 = (r1 * z2 - r2 * z1) / speed**3
    # z'/rho is a ratio of odd functions; its pole limit is z''/rho'
    k2 = odd_quotient(z1, emb.rho, h) / speed
    return k1, k2


def euclidean_mean_curvature(emb: EmbeddedProfile) -> np.ndarray:
    """``k1 + k2`` straight from the profile curve stencils (independent of ``emb.H0``)."""
    k1, k2 = principal_curvatures(emb)
    return k1 + k2


def h0_for(data) -> np.ndarray:
    return embed_revolution(data).H0


def total_mean_curvature(data) -> float:
    """``int H0 dA``."""
    p = _profile(data)
    return integrate_scalar(p, embed_revolution(p).H0)


def minkowski_residual(data) -> float:
    """``(int H0 dA)^2 - 16 pi |Sigma|``; nonnegative for convex surfaces, zero iff round."""
    emb = data if isinstance(data, EmbeddedProfile) else embed_revolution(data)
    p = emb.source
    return integrate_scalar(p, emb.H0) ** 2 - 16.0 * math.pi * area(p)
