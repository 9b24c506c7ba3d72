"""Smoke tests for the python bindings."""

import json

import pytest

import bhkdual

FERMAT_J = json.dumps(
    {
        "variables": ["x", "y", "z"],
        "polynomial": "x^3 + y^3 + z^3",
        "group": [["1/3", "1/3", "1/3"]],
    }
)

LOOP_J = json.dumps(
    {
        "variables": ["x", "y", "z"],
        "polynomial": "x^2*y + y^2*z + z^2*x",
        "group": [["1/3", "1/3", "1/3"]],
    }
)

CHAIN_TOML = """
variables = ["x", "y", "z"]
polynomial = "x^3*y + y^2*z + z^2"
group = [["1/2", "1/2", "0"]]
"""


def test_parse_model():
    m = bhkdual.parse_model(FERMAT_J)
    assert m["exponent_matrix"] == [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
    assert m["group"]["order"] == 3
    assert m["group"]["elementary_divisors"] == [3]
    assert m["warnings"] == []


def test_parse_toml():
    m = bhkdual.parse_model(CHAIN_TOML)
    assert m["group"]["order"] == 2
    assert m["polynomial"] == "x^3*y + y^2*z + z^2"


def test_dual_model():
    d = bhkdual.dual_model(FERMAT_J)
    assert d["gt"]["finite_order"] == 9
    assert d["gt"]["finite_divisors"] == [3, 3]
    assert d["gt"]["torus_rank"] == 0
    assert d["ptau"] == [[3, 0, 0], [0, 3, 0], [0, 0, 3]]


def test_krawitz_dual_matches_kernel():
    k = bhkdual.krawitz_dual(FERMAT_J)
    d = bhkdual.dual_model(FERMAT_J)
    assert k["order"] == d["gt"]["finite_order"]
    assert k["elementary_divisors"] == d["gt"]["finite_divisors"]


def test_cy_report():
    r = bhkdual.cy_report(FERMAT_J)
    assert r["calabi_yau"] is True
    assert r["weights_row"] == [9, 9, 9]
    assert r["det"] == 27


def test_weights():
    w = bhkdual.weights(FERMAT_J, side="dual")
    assert w["rank"] == 1
    assert w["generator"] == [1, 1, -1]


def test_verify_pair():
    cert = bhkdual.verify(FERMAT_J, LOOP_J, theorem="main")
    assert cert["verdict"] == "pass"
    assert cert["witnesses"]["weight_generator"] == [1, 1, -1]


def test_verify_group_mismatch_fails():
    trivial = json.dumps(
        {"variables": ["x", "y", "z"], "polynomial": "x^3 + y^3 + z^3", "group": []}
    )
    cert = bhkdual.verify(FERMAT_J, trivial)
    assert cert["verdict"] == "fail"
    assert "groups differ" in cert["diagnostics"]


def test_krawitz_equivalence_certificate():
    cert = bhkdual.krawitz_equivalence(FERMAT_J)
    assert cert["verdict"] == "pass"
    assert cert["witnesses"]["bruteforce_order"] == 9


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        bhkdual.parse_model('{"variables": ["x"], "polynomial": "x^3 + x^3"}')


def test_deterministic_output():
    a = bhkdual._core.verify_json(FERMAT_J, LOOP_J, "main", 0)
    b = bhkdual._core.verify_json(FERMAT_J, LOOP_J, "main", 0)
    assert a == b
