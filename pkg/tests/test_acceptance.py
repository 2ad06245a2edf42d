"""Acceptance gate: one pass/fail line per criterion.

Each ``check_*`` function returns ``(passed, detail)``; the pytest wrappers
record the line and then assert. Run ``python -m tests.test_acceptance`` from
the repository root for the lines alone.
"""

import math
import time

import numpy as np
import pytest

from qlmass import generators, metric_tools as mt, schwarzschild
from qlmass.algebra import brown_york_functional, hawking_functional, miao_functional, star
from qlmass.critical import bracket, exact_round, fillin_certificate, shi_tam_upper, verify_epsilon
from qlmass.embedding import embed_revolution, minkowski_residual
from qlmass.masses import brown_york, critical_mass, miao
from qlmass.surface import validate
from tests import acceptance_log
from tests.conftest import N, NONNEGATIVE, _suite

SCHW_GRID = [(m, k * m) for m in (0.5, 1.0, 2.0) for k in (1.25, 2.0, 4.0)]


def _schw(m, r):
    return schwarzschild.coordinate_sphere_data(m, r, N)


def check_1(suite):
    worst = 0.0
    for m, r in SCHW_GRID:
        assert r > m / 2
        d = _schw(m, r)
        if not validate(d).ok:
            return False, "validation failed for m=%g r=%g" % (m, r)
        exact_round(d)
        worst = max(worst, abs(critical_mass(d).value - m) / m)
    return worst <= 1e-6, "max relative error %.2e over 9 spheres (tol 1e-6)" % worst


def check_2(suite):
    e_exact = e_st = 0.0
    for m, r in SCHW_GRID:
        d = _schw(m, r)
        x = m / (2 * r)
        target = (1 + x) / (1 - x)
        e_exact = max(e_exact, abs(exact_round(d) - target))
        e_st = max(e_st, abs(shi_tam_upper(d) - target))
    ok = e_exact <= 1e-8 and e_st <= 1e-6
    return ok, "exact_round err %.2e (tol 1e-8), shi_tam err %.2e (tol 1e-6)" % (e_exact, e_st)


def check_3(suite):
    m, r = 1.0, 2.0
    lam_r = schwarzschild.lambda_exact(m, r)
    lam = np.linspace(lam_r / 1000, lam_r, 1000)
    lam[-1] = lam_r
    curve = schwarzschild.inner_mass_curve(m, r, lam)
    decreasing = bool(np.all(np.diff(curve) < 0))
    e_end = abs(schwarzschild.inner_mass_curve(m, r, lam_r))
    e_one = abs(schwarzschild.inner_mass_curve(m, r, 1.0) - 1.0)
    d = suite["schw_m1_r2"]
    limit = math.sqrt(validate(d).area / (16 * math.pi))
    e_lim = abs(schwarzschild.inner_mass_curve(m, r, 1e-6) - limit)
    ok = decreasing and e_end <= 1e-10 and e_one <= 1e-12 and e_lim <= 1e-6 and abs(limit - 1.5625) <= 1e-6
    return ok, ("decreasing=%s, |m(lambda_r)| %.1e, |m(1)-1| %.1e, |m(1e-6)-sqrt(A/16pi)| %.1e (limit %.10f)"
                % (decreasing, e_end, e_one, e_lim, limit))


def check_4(suite):
    slack = 0.0
    for key in NONNEGATIVE:
        d = suite[key]
        cr = critical_mass(d)
        top = cr.bracket[1] if cr.bracket is not None else cr.value
        mi, by = miao(d).value, brown_york(d).value
        slack = max(slack, top - mi, mi - by)
    d = suite["schw_m1_r2"]
    trio = (critical_mass(d).value, miao(d).value, brown_york(d).value)
    e_trio = max(abs(a - b) for a, b in zip(trio, (1.0, 1.0, 1.25)))
    ok = slack <= 1e-8 and e_trio <= 1e-6
    return ok, ("worst chain violation %.1e on %d datasets (tol 1e-8); Schwarzschild (%.9f, %.9f, %.9f) err %.1e"
                % (max(slack, 0.0), len(NONNEGATIVE), *trio, e_trio))


def check_5(suite):
    e_round = 0.0
    for radius in (0.5, 1.0, 3.0):
        emb = embed_revolution(generators.round_sphere(radius, 2.0 / radius, N))
        e_round = max(e_round, float(np.max(np.abs(emb.H0 - 2.0 / radius))))
    residuals = {k: minkowski_residual(d) for k, d in suite.items()}
    mink_min = min(residuals.values())
    ell = min(residuals["ellipsoid_1_2"], residuals["ellipsoid_2_1"])
    e_by = max(abs(brown_york(generators.ellipsoid(a, c, N)).value) for a, c in ((1, 2), (2, 1), (1, 1.3)))
    ok = e_round <= 1e-6 and mink_min >= -1e-8 and ell > 0 and e_by <= 1e-6
    return ok, ("H0-2/r %.1e; min Minkowski residual %.2e (ellipsoids %.3f); |BY(ellipsoid)| %.1e"
                % (e_round, mink_min, ell, e_by))


def check_6(suite):
    H, BY, MI = hawking_functional(), brown_york_functional(), miao_functional()
    e_idem = max(abs(star(f, f)(d) - f(d)) for f in (H, BY) for d in suite.values())
    e_assoc = 0.0
    for key in ("schw_m1_r2", "ellipsoid_1_2", "perturbed_H2"):
        d = suite[key]
        for f1, f2, f3 in ((H, BY, MI), (BY, H, MI), (MI, BY, H)):
            base = star(f1, f3)(d)
            e_assoc = max(e_assoc, abs(star(star(f1, f2), f3)(d) - base),
                          abs(star(f1, star(f2, f3))(d) - base))
    sign_ok, cases = True, set()
    for key in ("unit_H2", "schw_m1_r2", "schw_m05_r1", "ellipsoid_1_2", "perturbed_euclid_09"):
        d = suite[key]
        for f1, f2 in ((H, BY), (BY, H), (MI, H), (H, MI)):
            v2, v = f2(d), star(f1, f2)(d)
            if abs(v2) <= 1e-9:
                cases.add("zero")
                sign_ok &= abs(v) <= 1e-9
            else:
                cases.add("positive" if v2 > 0 else "negative")
                sign_ok &= math.copysign(1, v) == math.copysign(1, v2)
    sign_ok &= {"zero", "positive"} <= cases
    d = suite["schw_m1_r2"]
    hb, bh = star(H, BY)(d), star(BY, H)(d)
    gap = abs(bh - hb)
    ok = (e_idem <= 1e-10 and e_assoc <= 1e-9 and sign_ok and abs(hb - 1.0) <= 1e-6
          and abs(bh - 10 * math.pi) <= 1e-4 and gap > 30)
    return ok, ("idempotence %.1e, associativity %.1e, sign control %s, H*BY %.9f, BY*H %.9f "
                "(target 10pi = %.5f), gap %.4f (needs > 30)"
                % (e_idem, e_assoc, "ok" if sign_ok else "broken", hb, bh, 10 * math.pi, gap))


def check_7(suite):
    grids = [np.linspace(1.0, 8.0, k) for k in (129, 257, 513, 1025)]
    errs = [float(np.max(np.abs(mt.foliation_scalar_curvature(mt.schwarzschild_radial(1.0, r)))))
            for r in grids]
    ratios = [a / b for a, b in zip(errs, errs[1:])]
    r = np.linspace(1.0, 8.0, N + 1)
    e_conf = float(np.max(np.abs(mt.conformal_scalar(mt.flat_radial(r), 1 + 0.5 / r))))
    e_h = 0.0
    for m, r0 in ((1.0, 2.0), (0.5, 3.0), (2.0, 1.5)):
        Hb = mt.conformal_mean_curvature(2.0 / r0, 1 + m / (2 * r0), -m / (2 * r0**2))
        e_h = max(e_h, abs(Hb - schwarzschild.mean_curvature(m, r0)))
    e_str = mt.verification_report("collar", N)["collar"]["stretched_vs_collar"]
    ok = errs[-1] <= 1e-4 and min(ratios) >= 3.5 and e_conf <= 1e-5 and e_h <= 1e-8 and e_str <= 1e-6
    return ok, ("foliation %.1e (ratios %s), conformal %.1e, H_r %.1e, stretched vs collar %.1e"
                % (errs[-1], "/".join("%.1f" % x for x in ratios), e_conf, e_h, e_str))


def check_8(suite):
    ok, worst_ratio = True, 0.0
    for key, d in suite.items():
        cert = fillin_certificate(d)
        eps = cert.epsilon
        ok &= eps > 0 and verify_epsilon(d, eps)
        ok &= all(verify_epsilon(d, eps / 2**k) for k in range(1, 11))
        st = shi_tam_upper(d)
        ok &= eps <= st
        b = bracket(d)
        ok &= b.lower <= b.upper
        worst_ratio = max(worst_ratio, eps / st)
    return bool(ok), "%d datasets certified and re-verified; max eps/shi_tam %.3g" % (len(suite), worst_ratio)


def check_9(suite):
    ratios = []
    for H in (1e-2, 1e-4, 1e-6):
        d = generators.round_sphere(1.0, H, N)
        R = validate(d).areal_radius
        err = abs(critical_mass(d).value - 0.5)
        bound = (H * R / 2) ** 2 * 0.5 * (1 + 1e-6)
        ratios.append(err / bound)
    return max(ratios) <= 1.0, "error/bound for H = 1e-2, 1e-4, 1e-6: %s (must be <= 1)" % ", ".join(
        "%.9f" % x for x in ratios)


def check_10(suite):
    ok, rows = True, []
    for radius, H in ((1.0, 3.0), (2.0, 1.5), (0.5, 10.0)):
        d = generators.round_sphere(radius, H, N)
        lam0 = exact_round(d)
        m = critical_mass(d).value
        rep = validate(d)
        areal = schwarzschild.match_round_data(rep.area, H).m_areal
        ok &= lam0 < 1 and m < 0 and areal < 0 and math.copysign(1, m) == math.copysign(1, areal)
        rows.append("HR/2=%.2f: lambda0 %.4f, m %.4f" % (H * radius / 2, lam0, m))
    return bool(ok), "; ".join(rows)


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9, check_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, suite):
    passed, detail = CHECKS[number - 1](suite)
    acceptance_log.record(number, passed, detail)
    assert passed, detail


if __name__ == "__main__":
    start = time.perf_counter()
    data = _suite()
    results = []
    for i, check in enumerate(CHECKS, 1):
        passed, detail = check(data)
        acceptance_log.record(i, passed, detail)
        results.append(passed)
    print("%d/%d criteria pass in %.1f s" % (sum(results), len(results), time.perf_counter() - start))
