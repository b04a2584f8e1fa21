"""JSON mapping descriptors and the dilatation expression grammar."""

import json

import numpy as np
import pytest

from harmdist.descriptors import (
    load_descriptor,
    parse_complex,
    parse_descriptor,
    parse_entry,
    parse_expr,
)
from harmdist.errors import ConfigError


def test_parse_complex_forms():
    assert parse_complex(2) == 2 + 0j
    assert parse_complex("0.5+0.3i") == 0.5 + 0.3j
    assert parse_complex("-0.2i") == -0.2j
    assert parse_complex([1.0, -2.0]) == 1.0 - 2.0j
    with pytest.raises(ConfigError):
        parse_complex("abc")
    with pytest.raises(ConfigError):
        parse_complex([1.0, 2.0, 3.0])


def test_parse_expr_terms():
    z = np.array([0.1, -0.2 + 0.1j])
    m = parse_expr("0.3z")
    np.testing.assert_allclose(m(z), 0.3 * z, rtol=1e-14)
    m = parse_expr("z^2")
    np.testing.assert_allclose(m(z), z**2, rtol=1e-14)
    m = parse_expr("0.5z^3 + 0.1z")
    np.testing.assert_allclose(m(z), 0.5 * z**3 + 0.1 * z, rtol=1e-14)
    m = parse_expr("-z + 0.2i*z^2")
    np.testing.assert_allclose(m(z), -z + 0.2j * z**2, rtol=1e-14)
    with pytest.raises(ConfigError):
        parse_expr("sin(z)")
    with pytest.raises(ConfigError):
        parse_expr("")


def test_parse_entry_variants():
    z = np.array([0.1 + 0.05j, -0.2j])
    e = parse_entry({"name": "halfplane"})
    np.testing.assert_allclose(e(z), z / (1 - z), rtol=1e-14)
    e = parse_entry({"name": "exp", "params": {"c": 2.0}})
    np.testing.assert_allclose(e(z), (np.exp(2 * z) - 1) / 2.0, rtol=1e-12)
    e = parse_entry({"name": "mobius", "params": {"a": 1, "b": -0.2, "c": -0.2, "d": 1}})
    np.testing.assert_allclose(e(z), (z - 0.2) / (1 - 0.2 * z), rtol=1e-12)
    e = parse_entry({"coefficients": [0, 1, "0.5i"]})
    np.testing.assert_allclose(e(z), z + 0.5j * z**2, rtol=1e-12)
    e = parse_entry({"compose_sigma": {"a": 0.3, "inner": {"expr": "0.5z"}}})
    from harmdist.disk import automorphism

    np.testing.assert_allclose(e(z), automorphism(0.3, 0.5 * z), rtol=1e-10)


def test_parse_entry_rejections():
    with pytest.raises(ConfigError):
        parse_entry({"name": "identity", "params": {"c": 1}})
    with pytest.raises(ConfigError):
        parse_entry({"name": "nope"})
    with pytest.raises(ConfigError):
        parse_entry({"expr": "z", "name": "identity"})
    with pytest.raises(ConfigError):
        parse_entry({"surprise": 1})
    with pytest.raises(ConfigError):
        parse_entry("identity")


def test_descriptor_harmonic_variants():
    z = np.array([0.2, 0.1 - 0.2j])
    f = parse_descriptor({"h": {"name": "identity"}, "g": {"expr": "0.15z^2"}})
    np.testing.assert_allclose(f(z), z + np.conj(0.15 * z**2), rtol=1e-12)
    f = parse_descriptor({"h": {"name": "identity"}, "omega": {"expr": "0.3z"}})
    np.testing.assert_allclose(f(z), z + np.conj(0.15 * z**2), rtol=1e-9)
    f = parse_descriptor({"h": {"name": "koebe"}})
    assert f.is_analytic


def test_descriptor_rejections():
    with pytest.raises(ConfigError):
        parse_descriptor({"g": {"expr": "0.1z"}})  # no h
    with pytest.raises(ConfigError):
        parse_descriptor({"h": {"name": "identity"}, "g": {"expr": "z"},
                          "omega": {"expr": "z"}})
    with pytest.raises(ConfigError):
        parse_descriptor({"h": {"name": "identity"}, "extra": 1})
    with pytest.raises(ConfigError):
        parse_descriptor([1, 2])


def test_load_descriptor_file(tmp_path):
    p = tmp_path / "map.json"
    p.write_text(json.dumps({"h": {"name": "halfplane"}, "omega": {"expr": "0.4z"}}))
    f = load_descriptor(p)
    w = f.omega_derivs(np.array([0.2 + 0.1j]), 0)[0]
    np.testing.assert_allclose(w, 0.4 * (0.2 + 0.1j), rtol=1e-9)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        load_descriptor(bad)
