"""Bounds on the critical parameter lambda0 of Bartnik data.

``(Sigma, gamma, lam H)`` admits a fill-in with minimal inner boundary exactly
for ``lam`` in ``(0, lambda0)``. Three sources of information:

* exact: for round constant-H data ``lambda0 = 2/(H R)``;
* upper: the Shi-Tam bound ``int H0 dA / int H dA``;
* lower: an explicit fill-in certificate. On the product ``Sigma x [-1, 0]``
  take ``v = (H/4) phi(t)`` and ``u = 1 + eps v``. The metric ``u^4 g`` has
  boundary mean curvature ``eps H`` at ``t = 0``, a totally geodesic (hence
  minimal) face at ``t = -1``, and scalar curvature
  ``u^-5 (-8 eps Lap v + 2K u)``. If that is positive on the grid then
  ``eps`` is a member of the positive-type interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import errors
from .embedding import total_mean_curvature
from .surface import BartnikData, gauss_curvature, integrate_scalar, laplacian, validate

__all__ = [
    "COLLAR_RESOLUTION",
    "LambdaBracket",
    "FillInCertificate",
    "cutoff",
    "shi_tam_upper",
    "fillin_certificate",
    "verify_epsilon",
    "exact_round",
    "bracket",
]

COLLAR_RESOLUTION = 256
BISECTION_STEPS = 60
SAFETY = 0.99
DOUBLING_CAP = 2.0**64


@dataclass(frozen=True, eq=False)
class FillInCertificate:
    epsilon: float
    t_grid: np.ndarray
    phi_profile: np.ndarray
    min_scalar_curvature: float
    min_conformal_factor: float

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "min_scalar_curvature": self.min_scalar_curvature,
            "min_conformal_factor": self.min_conformal_factor,
        }


@dataclass(frozen=True)
class LambdaBracket:
    lower: float
    upper: float
    exact: Optional[float] = None
    certificate: Optional[FillInCertificate] = None

    def __post_init__(self):
        if not self.lower > 0:
            raise errors.NonPositiveLambda("lower bound must be positive, got %r" % self.lower)
        if self.lower > self.upper:
            raise errors.EmptyBracket("lower %.17g > upper %.17g" % (self.lower, self.upper))
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise errors.EmptyBracket("exact value %.17g outside [%.17g, %.17g]"
                                      % (self.exact, self.lower, self.upper))

    def as_dict(self) -> dict:
        out = {"lower": self.lower, "upper": self.upper}
        if self.exact is not None:
            out["exact"] = self.exact
        if self.certificate is not None:
            out["certificate"] = self.certificate.as_dict()
        return out


def shi_tam_upper(data: BartnikData) -> float:
    p = data.profile
    return total_mean_curvature(data) / integrate_scalar(p, p.H)


def cutoff(t):
    """``(chi, chi', chi'')`` for the quintic smoothstep rising on ``[-1/2, -1/4]``."""
    t = np.asarray(t, dtype=float)
    x = np.clip(4.0 * (t + 0.5), 0.0, 1.0)
    chi = x**3 * (10.0 - 15.0 * x + 6.0 * x * x)
    dchi = 4.0 * 30.0 * x * x * (1.0 - x) ** 2
    d2chi = 16.0 * 60.0 * x * (1.0 - x) * (1.0 - 2.0 * x)
    return chi, dchi, d2chi


def _collar(t):
    """``phi = t chi`` and ``phi''`` on the collar grid."""
    chi, dchi, d2chi = cutoff(t)
    return t * chi, 2.0 * dchi + t * d2chi


class _Problem:
    """Per-node affine pieces of the certificate inequalities.

    On every node ``-8 eps Lap v + 2K(1 + eps v) = a + eps b`` and
    ``1 + eps v`` are affine in ``eps``; only nodes with a negative slope can
    ever fail, so the bisection only looks at those.
    """

    def __init__(self, data: BartnikData, resolution: int):
        if resolution < 8:
            raise errors.InvalidSpec("collar resolution must be at least 8")
        p = data.profile
        K = gauss_curvature(p)
        if np.min(K) <= 0:
            raise errors.NotEmbeddableAsRevolution("certificate needs K > 0")
        if np.min(p.H) <= 0:
            raise errors.InvalidProfile("certificate needs H > 0")
        self.t = np.linspace(-1.0, 0.0, resolution)
        self.phi, dphi2 = _collar(self.t)
        H = p.H[:, None]
        self.K = K[:, None]
        self.v = 0.25 * H * self.phi[None, :]
        self.lap_v = (0.25 * H * dphi2[None, :]
                      + 0.25 * laplacian(p, p.H)[:, None] * self.phi[None, :])
        a = np.broadcast_to(2.0 * self.K, self.v.shape)
        b = -8.0 * self.lap_v + 2.0 * self.K * self.v
        falling = b < 0
        self._a, self._b = a[falling], b[falling]
        self._v = self.v[self.v < 0]

    def passes(self, eps: float) -> bool:
        return bool(np.all(self._a + eps * self._b > 0) and np.all(1.0 + eps * self._v > 0))

    def minima(self, eps: float):
        """``(min of -8 eps Lap v + 2K u, min u, min conformal scalar curvature)``."""
        u = 1.0 + eps * self.v
        num = -8.0 * eps * self.lap_v + 2.0 * self.K * u
        with np.errstate(divide="ignore", invalid="ignore"):
            scal = num / u**5
        return float(np.min(num)), float(np.min(u)), float(np.min(scal))


def verify_epsilon(data: BartnikData, epsilon: float,
                   collar_resolution: int = COLLAR_RESOLUTION) -> bool:
    """Re-check that ``epsilon`` satisfies both certificate inequalities on the grid."""
    if not epsilon > 0:
        return False
    return _Problem(data, collar_resolution).passes(epsilon)


def fillin_certificate(data: BartnikData,
                       collar_resolution: int = COLLAR_RESOLUTION) -> FillInCertificate:
    prob = _Problem(data, collar_resolution)
    lo = 0.0
    hi = 8.0 * float(np.min(prob.K)) / (8.0 * float(np.max(np.abs(prob.lap_v))) + 1.0)
    # both inequalities are affine in eps per node, so the passing set is an interval
    while prob.passes(hi):
        lo = hi
        hi *= 2.0
        if hi > DOUBLING_CAP:
            hi = DOUBLING_CAP
            break
    if lo < hi:
        for _ in range(BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            if prob.passes(mid):
                lo = mid
            else:
                hi = mid
    eps = SAFETY * lo
    if not (eps > 0 and prob.passes(eps)):
        raise errors.CertificateFailed("no positive epsilon passes the fill-in test")
    _, min_u, min_scal = prob.minima(eps)
    return FillInCertificate(eps, prob.t, prob.phi, min_scal, min_u)


def exact_round(data: BartnikData) -> float:
    """``2/(H R)`` for round data with constant ``H``."""
    report = validate(data)
    if not (report.is_round and report.is_constant_H):
        raise errors.NotRound(
            "exact lambda0 needs round constant-H data (K spread %.3g, H spread %.3g)"
            % (report.roundness_residual, report.constant_H_residual))
    H = float(np.mean(data.profile.H))
    return 2.0 / (H * report.areal_radius)


def bracket(data: BartnikData, collar_resolution: int = COLLAR_RESOLUTION) -> LambdaBracket:
    """Certified lower bound and Shi-Tam upper bound, plus the exact value on round data."""
    cert = fillin_certificate(data, collar_resolution)
    try:
        exact = exact_round(data)
    except errors.NotRound:
        return LambdaBracket(cert.epsilon, shi_tam_upper(data), None, cert)
    return LambdaBracket(min(cert.epsilon, exact), exact, exact, cert)
