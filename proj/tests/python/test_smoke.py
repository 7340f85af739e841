import cmath
import json
import math

import pytest

import rsi


def test_s_and_gamma():
    trig = rsi.Model("trig")
    assert abs(rsi.s(trig, 1j * math.pi) - 1j * math.sinh(math.pi)) < 1e-13
    assert abs(rsi.euler_gamma(0.5) - math.sqrt(math.pi)) < 1e-14
    rat = rsi.Model("rational")
    assert abs(rsi.gamma_functional_residual(rat, 1.0, 1.0)) < 1e-13
    assert abs(rsi.qprod(0.3, 0.5) * rsi.qprod(0.3, 2.0) - 1.0) < 1e-13


def test_errors_map_to_exceptions():
    with pytest.raises(rsi.PoleError):
        rsi.euler_gamma(-2.0)
    with pytest.raises(rsi.ConfigError):
        rsi.Model("parabolic")
    with pytest.raises(rsi.Error):
        rsi.gamma_G(rsi.Model("rational"), 0.3, 1j)


def test_source_identity():
    L = rsi.MassLabel
    X = [0.9 + 0.04j, 0.35 - 0.03j, -0.2 + 0.02j]
    for case in ("rational", "trig", "hyperbolic"):
        m = rsi.Model(case)
        for sign in (1, -1):
            r = rsi.residual_source_identity(sign, m, X, [L.PlusM0, L.MinusInvGM0, L.MinusM0])
            assert r.rel() < 1e-8
    ell = rsi.Model("elliptic")
    assert rsi.residual_source_identity(1, ell, X[:2], [L.PlusM0, L.PlusM0]).rel() > 1e-3


def test_lemma1():
    r = rsi.residual_WH(rsi.Model("rational"), 1j, [0.0, 1.0], [1.0, 1.0])
    assert abs(r.value) < 1e-15
    assert cmath.isfinite(r.scale)


def test_suite_round_trip():
    suite = rsi.select(rsi.default_suite(), identity="wh", case="elliptic")
    assert suite
    results = rsi.run_suite(suite)
    assert rsi.all_passed(results)
    text = rsi.render_json(results)
    assert text == rsi.render_json(rsi.run_suite(suite))
    data = json.loads(text)
    assert {r["identity"] for r in data["results"]} == {"wh"}
