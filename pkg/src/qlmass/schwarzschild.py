"""Closed forms for coordinate spheres of the isotropic Schwarzschild metric.

``g = (1 + m/2r)^4 delta``. Internally everything is expressed through the
areal radius ``R = r (1 + m/2r)^2``; the isotropic pair ``(m, r)`` only
appears at the API surface.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import errors
from .surface import BartnikData, RadialProfile

__all__ = [
    "SchwarzschildSphere",
    "RoundMatch",
    "conformal_factor",
    "areal_radius",
    "mean_curvature",
    "euclidean_mean_curvature",
    "coordinate_sphere_data",
    "lambda_exact",
    "inner_mass_curve",
    "match_round_data",
    "isotropic_radius",
]


@dataclass(frozen=True)
class SchwarzschildSphere:
    m: float
    r: float

    def __post_init__(self):
        check_sphere(self.m, self.r)

    @property
    def areal_radius(self) -> float:
        return areal_radius(self.m, self.r)

    @property
    def H(self) -> float:
        return mean_curvature(self.m, self.r)


@dataclass(frozen=True)
class RoundMatch:
    """Round constant-H data written as a Schwarzschild sphere in areal form."""

    R: float
    m_areal: float
    lambda0: float
    r_isotropic: Optional[float] = None


def check_sphere(m: float, r: float) -> None:
    if not r > 0:
        raise errors.InsideHorizon("isotropic radius must be positive, got %r" % r)
    if m > 0 and r <= m / 2.0:
        raise errors.InsideHorizon("r=%g is not outside the horizon r=m/2=%g" % (r, m / 2.0))
    if m < 0 and r <= -m / 2.0:
        raise errors.InsideHorizon("r=%g is inside the singular sphere r=|m|/2" % r)


def conformal_factor(m: float, r):
    return 1.0 + m / (2.0 * np.asarray(r, dtype=float))


def areal_radius(m: float, r: float) -> float:
    return r * (1.0 + m / (2.0 * r)) ** 2


def mean_curvature(m: float, r: float) -> float:
    u = 1.0 + m / (2.0 * r)
    return 2.0 / r * u**-2 - 2.0 * m / r**2 * u**-3


def euclidean_mean_curvature(m: float, r: float) -> float:
    """Mean curvature of the same round sphere embedded in R^3: ``2/R``."""
    return 2.0 / r * (1.0 + m / (2.0 * r)) ** -2


def coordinate_sphere_data(m: float, r: float, n: int = 1024, label: str = "") -> BartnikData:
    """Round profile of areal radius ``R`` carrying constant ``H_r``."""
    from .generators import round_sphere

    check_sphere(m, r)
    data = round_sphere(areal_radius(m, r), mean_curvature(m, r), n)
    return BartnikData(data.profile, label or "schwarzschild(m=%g,r=%g)" % (m, r), "schwarzschild")


def lambda_exact(m: float, r: float) -> float:
    """Critical parameter ``(1 + m/2r) / (1 - m/2r)``."""
    check_sphere(m, r)
    x = m / (2.0 * r)
    return (1.0 + x) / (1.0 - x)


def inner_mass_curve(m: float, r: float, lam):
    """Inner mass of ``(S_r, gamma, lam H_r)``: ``(r/2)((1+m/2r)^2 - lam^2 (1-m/2r)^2)``.

    Defined for ``m > 0`` and ``0 < lam <= lambda_r``; accepts scalars or arrays.
    """
    if not m > 0:
        raise errors.LambdaOutOfRange("the inner-mass curve needs m > 0, got %r" % m)
    lam_r = lambda_exact(m, r)
    lam_arr = np.asarray(lam, dtype=float)
    if np.any(lam_arr <= 0):
        raise errors.LambdaOutOfRange("lambda must be positive")
    if np.any(lam_arr > lam_r * (1.0 + 4 * np.finfo(float).eps)):
        raise errors.LambdaOutOfRange(
            "lambda exceeds the critical value %.17g" % lam_r)
    x = m / (2.0 * r)
    out = 0.5 * r * ((1.0 + x) ** 2 - lam_arr**2 * (1.0 - x) ** 2)
    return float(out) if np.ndim(out) == 0 else out


def isotropic_radius(R: float, m: float) -> Optional[float]:
    """Outer isotropic radius with areal radius ``R`` in mass ``m`` (None if ``R <= 2m``)."""
    disc = R * R - 2.0 * m * R
    if disc <= 0:
        return None
    return 0.5 * (R - m + math.sqrt(disc))


def match_round_data(A: float, H: float) -> RoundMatch:
    """Schwarzschild sphere with area ``A`` and mean curvature ``H``, in areal form.

    ``R = sqrt(A/4pi)``, ``m = (R/2)(1 - (HR/2)^2)``, ``lambda0 = 2/(HR)``.
    A negative ``m_areal`` is legal and marks negative-type data.
    """
    if not (A > 0 and H > 0):
        raise errors.ValidationError("area and H must be positive")
    R = math.sqrt(A / (4.0 * math.pi))
    x = 0.5 * H * R
    m = 0.5 * R * (1.0 - x * x)
    return RoundMatch(R=R, m_areal=m, lambda0=1.0 / x, r_isotropic=isotropic_radius(R, m))
