"""Quasi-local mass functionals evaluated on Bartnik data.

All four share the area prefactor ``sqrt(A/16pi)`` except Brown-York::

    hawking     sqrt(A/16pi) (1 - int H^2 dA / 16pi)
    brown_york  (1/8pi) int (H0 - H) dA
    miao        sqrt(A/16pi) (1 - (int H dA / int H0 dA)^2)
    critical    sqrt(A/16pi) (1 - 1/lambda0^2)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple

from . import errors
from .embedding import total_mean_curvature
from .surface import BartnikData, area, integrate_scalar

__all__ = [
    "Method",
    "MassValue",
    "area_factor",
    "critical_value",
    "hawking",
    "brown_york",
    "miao",
    "critical_mass",
]


class Method(str, enum.Enum):
    CLOSED_FORM = "closed_form"
    QUADRATURE = "quadrature"
    BRACKETED = "bracketed"


@dataclass(frozen=True)
class MassValue:
    value: float
    method: Method
    bracket: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        if self.bracket is not None:
            lo, hi = self.bracket
            if not lo <= self.value <= hi:
                raise errors.EmptyBracket(
                    "value %.17g outside its bracket [%.17g, %.17g]" % (self.value, lo, hi))

    def __float__(self) -> float:
        return float(self.value)

    def as_dict(self) -> dict:
        out = {"value": self.value, "method": self.method.value}
        if self.bracket is not None:
            out["bracket"] = list(self.bracket)
        return out


def area_factor(data: BartnikData) -> float:
    """``sqrt(A/16pi)``, half the areal radius."""
    return math.sqrt(area(data.profile) / (16.0 * math.pi))


def critical_value(data: BartnikData, lam: float) -> float:
    """``sqrt(A/16pi)(1 - 1/lam^2)``, increasing in ``lam``."""
    if not lam > 0:
        raise errors.NonPositiveLambda("lambda must be positive, got %r" % lam)
    return area_factor(data) * (1.0 - 1.0 / (lam * lam))


def hawking(data: BartnikData) -> MassValue:
    p = data.profile
    willmore = integrate_scalar(p, p.H**2)
    return MassValue(area_factor(data) * (1.0 - willmore / (16.0 * math.pi)), Method.QUADRATURE)


def brown_york(data: BartnikData) -> MassValue:
    p = data.profile
    gap = total_mean_curvature(data) - integrate_scalar(p, p.H)
    return MassValue(gap / (8.0 * math.pi), Method.QUADRATURE)


def miao(data: BartnikData) -> MassValue:
    p = data.profile
    ratio = integrate_scalar(p, p.H) / total_mean_curvature(data)
    return MassValue(area_factor(data) * (1.0 - ratio * ratio), Method.QUADRATURE)


def critical_mass(data: BartnikData, bracket=None) -> MassValue:
    """Mass from the critical parameter.

    ``bracket`` is a :class:`qlmass.critical.LambdaBracket`; it is computed
    when omitted. An exact ``lambda0`` gives a closed-form value. Otherwise the
    value is taken at the upper bound and the interval ``[f(lower), f(upper)]``
    is attached.
    """
    if bracket is None:
        from .critical import bracket as compute_bracket
        bracket = compute_bracket(data)
    if not bracket.lower > 0:
        raise errors.NonPositiveLambda("bracket lower bound must be positive")
    if bracket.lower > bracket.upper:
        raise errors.EmptyBracket("lower %.17g > upper %.17g" % (bracket.lower, bracket.upper))
    if bracket.exact is not None:
        return MassValue(critical_value(data, bracket.exact), Method.CLOSED_FORM)
    lo = critical_value(data, bracket.lower)
    hi = critical_value(data, bracket.upper)
    return MassValue(hi, Method.BRACKETED, (lo, hi))
