import math

import pytest

from qlmass import algebra, errors
from qlmass.algebra import (LambdaRule, MassFunctional, brown_york_functional, critical_functional,
                            get_functional, hawking_functional, inner_functional, lambda_of,
                            miao_functional, star, star_bounds)
from qlmass.masses import critical_mass
from qlmass.surface import integrate_scalar

H = hawking_functional()
BY = brown_york_functional()
MI = miao_functional()
CR = critical_functional()

SIGN_SETS = ("unit_H2", "schw_m1_r2", "schw_m05_r1", "ellipsoid_1_2", "perturbed_euclid_09")


def test_lambda_examples(suite):
    assert lambda_of(H, suite["unit_H2"]) == pytest.approx(1.0, rel=1e-12)
    assert lambda_of(H, suite["schw_m1_r2"]) == pytest.approx(5 / 3, rel=1e-12)
    assert lambda_of(BY, suite["schw_m1_r2"]) == pytest.approx(5 / 3, rel=1e-9)


def test_bisection_agrees_with_closed_forms(suite):
    for key in ("schw_m1_r2", "ellipsoid_2_1", "perturbed_H2"):
        d = suite[key]
        generic_h = MassFunctional("h", H.evaluate, LambdaRule.BISECTION)
        assert lambda_of(generic_h, d) == pytest.approx(lambda_of(H, d), rel=1e-9)
        assert lambda_of(MI, d) == pytest.approx(MI.expected_lambda(d), rel=1e-9)


def test_star_examples(suite):
    d = suite["schw_m1_r2"]
    assert star(H, BY)(d) == pytest.approx(1.0, abs=1e-6)
    # by definition BY*H = (1/8pi) int H0 (1 - sqrt(int H^2 / 16pi)) = 1.25 here
    p = d.profile
    from qlmass.embedding import total_mean_curvature
    closed = total_mean_curvature(d) * (1 - math.sqrt(integrate_scalar(p, p.H**2) / (16 * math.pi)))
    assert star(BY, H)(d) == pytest.approx(closed / (8 * math.pi), abs=1e-8)
    assert star(BY, H)(d) == pytest.approx(1.25, abs=1e-8)


def test_hawking_star_brown_york_is_miao(suite):
    for d in suite.values():
        assert star(H, BY)(d) == pytest.approx(MI(d), abs=1e-9)


def test_noncommutativity(suite):
    d = suite["schw_m1_r2"]
    gap = abs(star(BY, H)(d) - star(H, BY)(d))
    assert gap == pytest.approx(0.25, abs=1e-8)


def test_idempotence(suite):
    for f in (H, BY):
        for key, d in suite.items():
            assert abs(star(f, f)(d) - f(d)) <= 1e-10, (f.name, key)


def test_associativity_collapse(suite):
    for key in ("schw_m1_r2", "ellipsoid_1_2", "perturbed_H2"):
        d = suite[key]
        for f1, f2, f3 in ((H, BY, MI), (BY, H, MI), (MI, BY, H)):
            left = star(star(f1, f2), f3)(d)
            assert left == pytest.approx(star(f1, f3)(d), abs=1e-9)
            right = star(f1, star(f2, f3))(d)
            assert right == pytest.approx(star(f1, f3)(d), abs=1e-9)


def test_sign_control(suite):
    seen = set()
    for key in SIGN_SETS:
        d = suite[key]
        for f1, f2 in ((H, BY), (BY, H), (MI, H), (H, MI)):
            v2, v = f2(d), star(f1, f2)(d)
            if abs(v2) <= 1e-9:
                seen.add("zero")
                assert abs(v) <= 1e-9, (key, f1.name, f2.name)
            else:
                seen.add("positive" if v2 > 0 else "negative")
                assert math.copysign(1, v) == math.copysign(1, v2), (key, f1.name, f2.name)
    assert {"zero", "positive"} <= seen


def test_monotone_argument(suite):
    # Miao <= Brown-York on nonnegative data, so H*MI <= H*BY there
    for key in SIGN_SETS:
        d = suite[key]
        assert MI(d) <= BY(d) + 1e-9
        assert star(H, MI)(d) <= star(H, BY)(d) + 1e-9


def test_product_threshold_is_right_factor(suite):
    d = suite["perturbed_H2"]
    prod = star(H, BY)
    assert lambda_of(prod, d) == pytest.approx(prod.expected_lambda(d), rel=1e-9)


def test_critical_functional_is_hawking_star_inner(suite):
    for key in ("schw_m1_r2", "unit_H2", "unit_H1", "unit_H3"):
        d = suite[key]
        assert star(H, inner_functional())(d) == pytest.approx(CR(d), abs=1e-12)
    assert CR(suite["unit_H1"]) == pytest.approx(0.375, abs=1e-12)


def test_inner_functional(suite):
    inner = inner_functional()
    assert inner(suite["schw_m1_r2"]) == pytest.approx(1.0, rel=1e-12)
    assert inner(suite["unit_H3"]) == -math.inf
    with pytest.raises(errors.NotRound):
        inner(suite["ellipsoid_1_2"])


def test_star_bounds_contain_point_value(suite):
    d = suite["perturbed_H2"]
    lo, hi = star_bounds(H, CR, d)
    assert lo <= star(H, CR)(d) <= hi + 1e-12
    lo, hi = star_bounds(H, BY, d)
    assert lo == pytest.approx(hi)


def test_no_sign_change(unit):
    always = MassFunctional("always", lambda d: 1.0, LambdaRule.BISECTION)
    with pytest.raises(errors.NoSignChange):
        lambda_of(always, unit)
    never = MassFunctional("never", lambda d: -1.0, LambdaRule.BISECTION)
    with pytest.raises(errors.NoSignChange):
        lambda_of(never, unit)


def test_not_decreasing(unit):
    import numpy as np

    def bump(d):
        lam = float(np.mean(d.profile.H)) / 2.0
        return 1.0 - (2.0 * lam - 3.0) ** 2   # rises on (0, 1.5), falls after

    with pytest.raises(errors.NotDecreasing):
        lambda_of(MassFunctional("bump", bump, LambdaRule.BISECTION), unit)


def test_registry():
    assert set(algebra.FUNCTIONALS) == {"hawking", "brown-york", "miao", "critical"}
    assert get_functional("brown-york").name == "brown-york"
    with pytest.raises(errors.InvalidSpec):
        get_functional("bartnik")
