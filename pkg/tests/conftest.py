import numpy as np
import pytest

from qlmass import generators, schwarzschild
from qlmass.embedding import h0_for
from qlmass.surface import BartnikData, RadialProfile

N = 1024


def pinched_profile(n=512):
    """Closed metric of revolution with a negatively curved waist."""
    t, s, c = generators._sin_cos(n)
    rho = s * (1.0 - 0.6 * s**2)
    alpha = np.hypot(c * (1.0 - 1.8 * s**2), s)
    return RadialProfile(t, alpha, rho, np.full(n, 2.0))


def with_euclidean_H(data, factor=1.0, label=None):
    p = data.profile
    return BartnikData(p.with_H(factor * h0_for(data)), label or data.label, data.provenance)


def _suite():
    perturbed = generators.perturbed_round(1.0, 2.0, 0.08, 2, N)
    return {
        "unit_H2": generators.round_sphere(1.0, 2.0, N),
        "unit_H1": generators.round_sphere(1.0, 1.0, N),
        "schw_m1_r2": schwarzschild.coordinate_sphere_data(1.0, 2.0, N),
        "schw_m05_r1": schwarzschild.coordinate_sphere_data(0.5, 1.0, N),
        "schw_m2_r8": schwarzschild.coordinate_sphere_data(2.0, 8.0, N),
        "ellipsoid_1_2": generators.ellipsoid(1.0, 2.0, N),
        "ellipsoid_2_1": generators.ellipsoid(2.0, 1.0, N),
        "perturbed_euclid_09": with_euclidean_H(perturbed, 0.9, "perturbed(0.9 H0)"),
        "perturbed_H2": perturbed,
        "unit_H3": generators.round_sphere(1.0, 3.0, N),
        "schw_neg": schwarzschild.coordinate_sphere_data(-0.5, 1.0, N),
    }


# datasets known to admit a valid fill-in: round with HR/2 <= 1, Euclidean-H
# data, and anything with H <= H0 pointwise
NONNEGATIVE = ("unit_H2", "unit_H1", "schw_m1_r2", "schw_m05_r1", "schw_m2_r8",
               "ellipsoid_1_2", "ellipsoid_2_1", "perturbed_euclid_09")


@pytest.fixture(scope="session")
def suite():
    return _suite()


@pytest.fixture(scope="session")
def nonnegative(suite):
    return {k: suite[k] for k in NONNEGATIVE}


@pytest.fixture(scope="session")
def schw(suite):
    return suite["schw_m1_r2"]


@pytest.fixture(scope="session")
def unit(suite):
    return suite["unit_H2"]


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
