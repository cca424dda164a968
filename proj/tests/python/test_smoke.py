"""Smoke tests for the python bindings."""

import json

import pytest

import qtorus as qt


def test_parse_and_act_twisted():
    env = qt.ParamEnv("2", "1/3", "1/5")
    space = qt.ModuleSpace("twisted", env, (1, 0))
    out = qt.act(space, "E12(-1,0)", "x[1,0]^3")
    assert str(out) == "-308/75*x[1,0]^2"


def test_vector_algebra_roundtrip():
    env = qt.ParamEnv("q", "mu", "b")
    v = qt.parse_vector("x[1,0]^2 - 3/2*x[0,-1]", env)
    w = qt.parse_vector(str(v), env)
    assert v == w
    assert (v - w).is_zero()


def test_weights():
    env = qt.ParamEnv("2", "1/2")
    space = qt.ModuleSpace("plain", env)
    wt = qt.weights(space, qt.parse_vector("x[1,0]", env))
    assert wt.e11 == "-1/2"
    assert wt.e22 == "1"
    assert wt.d1 == "1"
    assert wt.d2 == "0"


def test_singular_vector():
    env = qt.ParamEnv("3", "0")
    w = qt.singular_vector(env, (1, 0), (0, 1), 2)
    assert str(w) == "-1/3*x[-1,2]*x[1,0]^-2 + x[0,1]^2*x[1,0]^-3"
    out = qt.act(qt.ModuleSpace("localized", env, (1, 0)), "E12(-1,0)", str(w))
    assert out.is_zero()


def test_cyclicity_report():
    env = qt.ParamEnv("2", "1/3")
    v = qt.parse_vector("x[1,0]^-2*x[0,1]^2", env)
    report = qt.cyclicity_run(v, env, (1, 0), 10)
    assert report.verdict == "verified"
    assert report.trials == 2
    doc = json.loads(report.json())
    assert doc["schema"] == 1
    assert doc["verdict"] == "verified"
    assert "runtime_ms" not in doc


def test_run_suite_deterministic():
    a = qt.run_suite("bracket", 10, 7)
    b = qt.run_suite("bracket", 10, 7)
    assert a.ok() and b.ok()
    assert a.json() == b.json()


def test_parse_error():
    env = qt.ParamEnv("2", "0")
    with pytest.raises(qt.ExprParseError):
        qt.parse_vector("x[1,0]^0", env)
