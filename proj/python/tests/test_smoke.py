import math

import numpy as np
import pytest

import gkcp2


def test_lattice_tertiary_point():
    lat = gkcp2.lattice(0.02)
    z = 2 * lat["omega1"] / 3
    assert abs(gkcp2.wp(z, 0.02) - 1 / 12) < 1e-12
    assert abs(gkcp2.wp_prime(z, 0.02) + 0.02) < 1e-12
    assert lat["e1"] > lat["e3"] > lat["e2"]


def test_y_of_polar_invariants_and_round_trip():
    y1, y2, y3 = gkcp2.y_of_polar(0.015, 1.2)
    assert abs(y1 + y2 + y3 - 1) < 1e-13
    assert abs(y1 * y2 * y3 - 0.015) < 1e-14
    c3, s = gkcp2.polar_of_y(y1, y2)
    assert abs(c3 - 0.015) < 1e-13 and abs(s - 1.2) < 1e-9


def test_flow_matches_ode():
    c3, s = gkcp2.flow_map(0.02, 0.5, 1.0)
    a = np.array(gkcp2.y_of_polar(c3, s))
    b = np.array(gkcp2.ode_oracle(gkcp2.y_of_polar(0.02, 0.5), 1.0))
    assert np.max(np.abs(a - b)) < 1e-9


def test_fields():
    Im = gkcp2.field("I_minus", 0.02, 1.0)
    Ip = gkcp2.field("I_plus", 0.02, 1.0, 0.5)
    Q = gkcp2.field("Q", 0.02, 1.0)
    F = gkcp2.field("F", 0.02, 1.0, 0.5)
    assert Im.shape == (4, 4)
    assert np.allclose(Im @ Im, -np.eye(4), atol=1e-12)
    assert np.max(np.abs(Ip - Im + Q @ F)) < 1e-10
    g = gkcp2.field("g", 0.02, 1.0, 0.05)
    assert np.linalg.eigvalsh(g).min() > 0


def test_gkp():
    assert gkcp2.gkp(0.02, 1.0, 0.0)["K"] == 0.0
    v = gkcp2.gkp(0.02, 1.0, 0.5)
    assert abs(v["fubini_study_part"] - 0.125 * math.log(0.02)) < 1e-15


def test_errors():
    with pytest.raises(gkcp2.DomainError):
        gkcp2.lattice(0.5)
    with pytest.raises(gkcp2.Error):
        gkcp2.y_of_polar(-1.0, 0.0)
    with pytest.raises(gkcp2.BoundaryError):
        gkcp2.cp2_hessian(0.0, 0.5)
    with pytest.raises(ValueError):
        gkcp2.field("nope", 0.02, 1.0)


def test_check_suite():
    reports = gkcp2.check("toric", 42)
    assert len(reports) == 1 and reports[0]["pass"]
    assert "gks" in gkcp2.suite_names()
