import math

import numpy as np
import pytest

from qlmass import errors, generators
from qlmass.generators import GeneratorSpec, generate
from qlmass.surface import validate


def test_every_suite_dataset_validates(suite):
    for key, d in suite.items():
        assert validate(d).ok, key


@pytest.mark.parametrize("spec", [
    GeneratorSpec("round", {"radius": 1.0, "H": 2.0}),
    GeneratorSpec("schwarzschild", {"m": 1.0, "r": 2.0}),
    GeneratorSpec("ellipsoid", {"a": 1.0, "c": 2.0}),
    GeneratorSpec("perturbed_round", {"amp": 0.1, "mode": 3}),
])
def test_generate_kinds(spec):
    d = generate(spec)
    rep = validate(d)
    assert rep.ok
    assert rep.is_round == (spec.kind in ("round", "schwarzschild"))


def test_ellipsoid_has_positive_curvature():
    rep = validate(generators.ellipsoid(1.0, 2.0, 1024))
    assert rep.K_min > 0 and not rep.is_round


@pytest.mark.parametrize("spec", [
    GeneratorSpec("cube", {}),
    GeneratorSpec("round", {"radius": -1.0}),
    GeneratorSpec("ellipsoid", {"a": 0.0}),
    GeneratorSpec("schwarzschild", {"m": 1.0, "r": 0.4}),
    GeneratorSpec("perturbed_round", {"amp": 0.9}),
    GeneratorSpec("round", {"colour": 3}),
    GeneratorSpec("round", {}, n=8),
])
def test_invalid_specs(spec):
    with pytest.raises(errors.InvalidSpec):
        generate(spec)


def test_default_n_from_environment(monkeypatch):
    monkeypatch.setenv("QLMASS_N", "128")
    assert generators.default_n() == 128
    monkeypatch.setenv("QLMASS_N", "lots")
    assert generators.default_n() == 1024
    monkeypatch.delenv("QLMASS_N")
    assert generators.default_n() == 1024


def test_poles_are_symmetric():
    d = generators.round_sphere(1.0, 2.0, 1024)
    b = d.profile.beta
    np.testing.assert_array_equal(b, b[::-1])


def test_ellipsoid_area_limits():
    assert generators.ellipsoid_area(1.0, 1.0) == pytest.approx(4 * math.pi)
    assert generators.ellipsoid_area(1.0, 1.0 + 1e-7) == pytest.approx(4 * math.pi, rel=1e-6)
    assert generators.ellipsoid_area(1.0 + 1e-7, 1.0) == pytest.approx(4 * math.pi, rel=1e-6)
