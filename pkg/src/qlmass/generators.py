"""Canonical Bartnik data: round spheres, Schwarzschild spheres, ellipsoids, perturbed spheres."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import legendre

from . import errors
from .surface import BartnikData, RadialProfile, validate

__all__ = [
    "DEFAULT_N",
    "default_n",
    "GeneratorSpec",
    "generate",
    "polar_grid",
    "round_sphere",
    "schwarzschild_sphere",
    "ellipsoid",
    "ellipsoid_mean_curvature",
    "ellipsoid_area",
    "perturbed_round",
]

DEFAULT_N = 1024
KINDS = ("round", "schwarzschild", "ellipsoid", "perturbed_round")


def default_n() -> int:
    """Sample count from ``QLMASS_N`` (fallback 1024)."""
    raw = os.environ.get("QLMASS_N", "")
    try:
        return int(raw) if raw else DEFAULT_N
    except ValueError:
        return DEFAULT_N


def polar_grid(n: int, length: float = math.pi):
    """Uniform grid on ``[0, length]`` plus its exact mirror ``length - t``.

    Trig functions near the far pole are evaluated on the mirror so both poles
    carry the same relative precision.
    """
    k = np.arange(n, dtype=float)
    t = length * k / (n - 1)
    t_rev = length * (n - 1 - k) / (n - 1)
    return t, t_rev


def _sin_cos(n: int):
    t, t_rev = polar_grid(n)
    near = np.arange(n) <= (n - 1) / 2
    s = np.where(near, np.sin(t), np.sin(t_rev))
    c = np.where(near, np.cos(t), -np.cos(t_rev))
    return t, s, c


def _check_n(n: int) -> int:
    n = int(n)
    if n < 16:
        raise errors.InvalidSpec("N must be at least 16, got %d" % n)
    return n


def round_sphere(radius: float = 1.0, H: float = 2.0, n: int = DEFAULT_N,
                 label: str = "") -> BartnikData:
    if not radius > 0:
        raise errors.InvalidSpec("radius must be positive")
    if not H > 0:
        raise errors.InvalidSpec("H must be positive")
    n = _check_n(n)
    t, s, _ = _sin_cos(n)
    p = RadialProfile(t, np.full(n, float(radius)), radius * s, np.full(n, float(H)))
    return BartnikData(p, label or "round(R=%g,H=%g)" % (radius, H), "round")


def schwarzschild_sphere(m: float, r: float, n: int = DEFAULT_N, label: str = "") -> BartnikData:
    from .schwarzschild import coordinate_sphere_data
    return coordinate_sphere_data(m, r, n, label=label)


def ellipsoid_area(a: float, c: float) -> float:
    """Closed-form area of the spheroid with equatorial radius ``a`` and polar ``c``."""
    if math.isclose(a, c):
        return 4.0 * math.pi * a * a
    if c > a:
        e = math.sqrt(1.0 - a * a / (c * c))
        return 2.0 * math.pi * a * a * (1.0 + c / (a * e) * math.asin(e))
    e = math.sqrt(1.0 - c * c / (a * a))
    return 2.0 * math.pi * a * a * (1.0 + (1.0 - e * e) / e * math.atanh(e))


def ellipsoid_mean_curvature(a: float, c: float, n: int = DEFAULT_N) -> np.ndarray:
    """``H0 = a c / w^3 + c / (a w)`` with ``w = sqrt(a^2 cos^2 u + c^2 sin^2 u)``."""
    _, s, co = _sin_cos(n)
    w = np.sqrt(a * a * co * co + c * c * s * s)
    return a * c / w**3 + c / (a * w)


def ellipsoid(a: float = 1.0, c: float = 2.0, n: int = DEFAULT_N, H=None,
              label: str = "") -> BartnikData:
    """Spheroid ``rho = a sin u, z = c (1 - cos u)``; ``H`` defaults to its Euclidean value."""
    if not (a > 0 and c > 0):
        raise errors.InvalidSpec("ellipsoid semi-axes must be positive")
    n = _check_n(n)
    t, s, co = _sin_cos(n)
    alpha = np.sqrt(a * a * co * co + c * c * s * s)
    if H is None:
        Hs = ellipsoid_mean_curvature(a, c, n)
    else:
        Hs = np.broadcast_to(np.asarray(H, dtype=float), (n,))
        if np.any(Hs <= 0):
            raise errors.InvalidSpec("H must be positive")
    p = RadialProfile(t, alpha, a * s, Hs)
    return BartnikData(p, label or "ellipsoid(a=%g,c=%g)" % (a, c), "ellipsoid")


def perturbed_round(radius: float = 1.0, H: float = 2.0, amp: float = 0.05, mode: int = 2,
                    n: int = DEFAULT_N, label: str = "") -> BartnikData:
    """Round sphere with ``rho -> rho (1 + amp P_mode(cos t))`` and ``z`` kept.

    ``alpha`` is recomputed as the speed of the perturbed profile curve, so the
    metric stays isometrically embedded. Rejected if ``K`` or ``H`` is not
    positive.
    """
    if not radius > 0:
        raise errors.InvalidSpec("radius must be positive")
    if not H > 0:
        raise errors.InvalidSpec("H must be positive")
    if mode < 1:
        raise errors.InvalidSpec("mode must be >= 1")
    n = _check_n(n)
    t, s, co = _sin_cos(n)
    coef = np.zeros(mode + 1)
    coef[mode] = 1.0
    P = legendre.legval(co, coef)
    dP = legendre.legval(co, legendre.legder(coef))   # dP/dx at x = cos t
    g = 1.0 + amp * P
    if np.min(g) <= 0:
        raise errors.InvalidSpec("amplitude %g makes the profile radius non-positive" % amp)
    drho = radius * (co * g - amp * s * s * dP)
    dz = radius * s
    alpha = np.sqrt(drho**2 + dz**2)
    data = BartnikData(RadialProfile(t, alpha, radius * s * g, np.full(n, float(H))),
                       label or "perturbed(R=%g,H=%g,amp=%g,mode=%d)" % (radius, H, amp, mode),
                       "perturbed_round")
    report = validate(data)
    if report.diagnostics:
        raise errors.InvalidSpec("perturbation too large or grid too coarse (n=%d): %s"
                                 % (n, "; ".join(report.diagnostics)))
    return data


@dataclass(frozen=True)
class GeneratorSpec:
    kind: str
    parameters: dict = field(default_factory=dict)
    n: int = DEFAULT_N


def generate(spec: GeneratorSpec) -> BartnikData:
    """Dispatch on ``spec.kind``; parameters are passed as keywords."""
    builders = {
        "round": round_sphere,
        "schwarzschild": schwarzschild_sphere,
        "ellipsoid": ellipsoid,
        "perturbed_round": perturbed_round,
    }
    if spec.kind not in builders:
        raise errors.InvalidSpec("unknown generator kind %r (expected one of %s)"
                                 % (spec.kind, ", ".join(KINDS)))
    try:
        return builders[spec.kind](n=spec.n, **spec.parameters)
    except TypeError as exc:
        raise errors.InvalidSpec(str(exc)) from None
    except (errors.InsideHorizon, errors.NotEmbeddableAsRevolution) as exc:
        raise errors.InvalidSpec(str(exc)) from None
