"""Mass functionals as values, their scaling thresholds, and the twisted product.

For a functional ``m`` the threshold ``lambda_m(data)`` is the sup of the
``lam`` with ``m(scale_H(data, lam)) >= 0``. The product is

    (m1 * m2)(data) = m1(scale_H(data, lambda_1 / lambda_2))

so ``m1 * m2`` vanishes exactly where ``m2`` does, and carries the magnitude
of ``m1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Tuple

import numpy as np

from . import critical, errors, masses, schwarzschild
from .surface import BartnikData, integrate_scalar, scale_H, validate

__all__ = [
    "LambdaRule",
    "MassFunctional",
    "LAMBDA_TOL",
    "LAMBDA_CAP",
    "lambda_of",
    "lambda_interval",
    "evaluate_interval",
    "star",
    "star_bounds",
    "hawking_functional",
    "brown_york_functional",
    "miao_functional",
    "critical_functional",
    "inner_functional",
    "FUNCTIONALS",
    "get_functional",
]

LAMBDA_TOL = 1e-10
LAMBDA_CAP = 2.0**64
_MONOTONE_SLACK = 1e-12


class LambdaRule(str, enum.Enum):
    CLOSED_FORM_HAWKING = "closed_form_hawking"
    CLOSED_FORM_BROWN_YORK = "closed_form_brown_york"
    CRITICAL_PARAMETER = "critical_parameter"
    BISECTION = "bisection"


@dataclass(frozen=True)
class MassFunctional:
    """A map from Bartnik data to a mass, plus how to find its threshold.

    ``expected_lambda`` is an optional independent prediction of the
    threshold, used only as a cross-check (products know theirs is the
    threshold of the right factor).
    """

    name: str
    evaluate: Callable[[BartnikData], float]
    lambda_rule: LambdaRule
    expected_lambda: Optional[Callable[[BartnikData], float]] = field(default=None, compare=False)

    def __call__(self, data: BartnikData) -> float:
        return float(self.evaluate(data))


def _hawking_lambda(data: BartnikData) -> float:
    p = data.profile
    return math.sqrt(16.0 * math.pi / integrate_scalar(p, p.H**2))


def _brown_york_lambda(data: BartnikData) -> float:
    return critical.shi_tam_upper(data)


def _critical_lambda(data: BartnikData) -> float:
    b = critical.bracket(data)
    return b.exact if b.exact is not None else b.upper


def lambda_interval(f: MassFunctional, data: BartnikData) -> Tuple[float, float]:
    """Threshold as an interval; a point interval unless only a bracket is known."""
    if f.lambda_rule is LambdaRule.CRITICAL_PARAMETER:
        b = critical.bracket(data)
        if b.exact is not None:
            return b.exact, b.exact
        return b.lower, b.upper
    lam = lambda_of(f, data)
    return lam, lam


def evaluate_interval(f: MassFunctional, data: BartnikData) -> Tuple[float, float]:
    """Value of ``f`` as an interval; only the critical mass on non-round data is wide."""
    if f.lambda_rule is LambdaRule.CRITICAL_PARAMETER and f.name == "critical":
        mv = masses.critical_mass(data)
        if mv.bracket is not None:
            return mv.bracket
        return mv.value, mv.value
    v = f(data)
    return v, v


def _bisect_threshold(f: MassFunctional, data: BartnikData) -> float:
    def g(lam):
        return f(scale_H(data, lam))

    lo = hi = 1.0
    if g(1.0) >= 0:
        while g(hi) >= 0:
            lo = hi
            hi *= 2.0
            if hi > LAMBDA_CAP:
                raise errors.NoSignChange("%s stays nonnegative up to lambda = 2^64" % f.name)
    else:
        while g(lo) < 0:
            hi = lo
            lo *= 0.5
            if lo < 1.0 / LAMBDA_CAP:
                raise errors.NoSignChange("%s stays negative down to lambda = 2^-64" % f.name)
    # spot-check that the functional decreases across the bracket
    probe = np.geomspace(0.5 * lo, 2.0 * hi, 5)
    vals = [g(x) for x in probe]
    scale = max(1.0, max(abs(v) for v in vals))
    if any(b > a + _MONOTONE_SLACK * scale for a, b in zip(vals, vals[1:])):
        raise errors.NotDecreasing("%s is not decreasing in lambda near %.6g" % (f.name, lo))
    while hi - lo > LAMBDA_TOL * max(1.0, lo):
        mid = 0.5 * (lo + hi)
        if g(mid) >= 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def lambda_of(f: MassFunctional, data: BartnikData) -> float:
    """Scaling threshold of ``f`` on ``data`` (positive and finite)."""
    rule = f.lambda_rule
    if rule is LambdaRule.CLOSED_FORM_HAWKING:
        return _hawking_lambda(data)
    if rule is LambdaRule.CLOSED_FORM_BROWN_YORK:
        return _brown_york_lambda(data)
    if rule is LambdaRule.CRITICAL_PARAMETER:
        return _critical_lambda(data)
    return _bisect_threshold(f, data)


def star(f1: MassFunctional, f2: MassFunctional) -> MassFunctional:
    """The twisted product ``f1 * f2``."""

    def evaluate(data: BartnikData) -> float:
        ratio = lambda_of(f1, data) / lambda_of(f2, data)
        return f1(scale_H(data, ratio))

    return MassFunctional(
        name="%s*%s" % (f1.name, f2.name),
        evaluate=evaluate,
        lambda_rule=LambdaRule.BISECTION,
        expected_lambda=lambda data: lambda_of(f2, data),
    )


def star_bounds(f1: MassFunctional, f2: MassFunctional, data: BartnikData) -> Tuple[float, float]:
    """Interval containing ``(f1 * f2)(data)`` when a threshold is only bracketed.

    ``f1(scale_H(data, s))`` decreases in ``s``, so the extremes come from the
    extreme ratios of the two threshold intervals.
    """
    lo1, hi1 = lambda_interval(f1, data)
    lo2, hi2 = lambda_interval(f2, data)
    low = evaluate_interval(f1, scale_H(data, hi1 / lo2))[0]
    high = evaluate_interval(f1, scale_H(data, lo1 / hi2))[1]
    return low, high


def hawking_functional() -> MassFunctional:
    return MassFunctional("hawking", lambda d: masses.hawking(d).value,
                          LambdaRule.CLOSED_FORM_HAWKING, _hawking_lambda)


def brown_york_functional() -> MassFunctional:
    return MassFunctional("brown-york", lambda d: masses.brown_york(d).value,
                          LambdaRule.CLOSED_FORM_BROWN_YORK, _brown_york_lambda)


def miao_functional() -> MassFunctional:
    # threshold found generically; the closed form int H0 / int H is the cross-check
    return MassFunctional("miao", lambda d: masses.miao(d).value,
                          LambdaRule.BISECTION, _brown_york_lambda)


def critical_functional() -> MassFunctional:
    return MassFunctional("critical", lambda d: masses.critical_mass(d).value,
                          LambdaRule.CRITICAL_PARAMETER, _critical_lambda)


def _inner_mass(data: BartnikData) -> float:
    """Inner mass of round constant-H data: the mass of the matched Schwarzschild sphere.

    Negative-type data has no valid fill-in and gets ``-inf``.
    """
    report = validate(data)
    if not (report.is_round and report.is_constant_H):
        raise errors.NotRound("inner mass is only available for round constant-H data")
    match = schwarzschild.match_round_data(report.area, float(np.mean(data.profile.H)))
    return match.m_areal if match.lambda0 >= 1.0 else -math.inf


def inner_functional() -> MassFunctional:
    return MassFunctional("inner", _inner_mass, LambdaRule.CRITICAL_PARAMETER, _critical_lambda)


FUNCTIONALS = {
    "hawking": hawking_functional,
    "brown-york": brown_york_functional,
    "miao": miao_functional,
    "critical": critical_functional,
}


def get_functional(name: str) -> MassFunctional:
    try:
        return FUNCTIONALS[name]()
    except KeyError:
        raise errors.InvalidSpec("unknown functional %r (expected one of %s)"
                                 % (name, ", ".join(FUNCTIONALS))) from None
