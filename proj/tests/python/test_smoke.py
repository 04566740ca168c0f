"""Smoke tests for the Python bindings: exact values end to end."""

from fractions import Fraction

import pytest

import gdgap


def test_scalar_arithmetic():
    half = gdgap.Scalar("1/2")
    third = gdgap.Scalar("1/3")
    assert str(half + third) == "5/6"
    s2 = gdgap.Scalar("sqrt(2)")
    assert str(s2 * s2) == "2"
    assert (gdgap.Scalar("1-1*sqrt(3)")).sign() == -1
    assert (half + third).as_fraction() == Fraction(5, 6)
    assert float(s2) == pytest.approx(2**0.5)
    with pytest.raises(ValueError):
        gdgap.Scalar("3/0")
    with pytest.raises(ValueError):
        gdgap.Scalar("sqrt(4)")


def test_heronian_example_exact():
    cfg = gdgap.make_config((0, 0), (154, 0), (55, 132), (90, 48), 10)
    a0, ax, ay, az = gdgap.area_set(cfg)
    assert [str(v) for v in (a0, ax, ay, az)] == ["20328", "3696", "9240", "7392"]
    w = gdgap.apex(cfg)
    assert [str(v) for v in w] == ["215490/2309", "339416/6927", "49280/2309"]
    cert = gdgap.certificate(cfg)
    assert str(cert.lhs) == "198873308525/145467"
    assert cert.lhs == cert.rhs
    assert (str(cert.u1), str(cert.v1)) == ("1057056", "-7868399616")
    assert gdgap.verdict(cfg).satisfied


def test_quadratic_extension_example():
    cfg = gdgap.make_config(("-1", "0"), ("1", "0"), ("0", "sqrt(3)"),
                            ("0", "1/3*sqrt(3)"), "1/2")
    m = gdgap.metrics(cfg)
    assert str(m.R2) == "169/36"
    assert str(m.d2) == "16/9"
    v = gdgap.verdict(cfg)
    assert v.satisfied and v.equality


def test_critical_radius_detection():
    cfg = gdgap.make_config(("-sqrt(2)", "-1"), ("sqrt(2)", "-1"), ("0", "1"),
                            ("0", "0"), "1/3")
    assert str(gdgap.critical_inradius_sq(cfg)) == "1/2"
    crit = gdgap.with_radius(cfg, "1/2*sqrt(2)")
    assert gdgap.criticality_coplanarity(crit).is_zero()
    with pytest.raises(ArithmeticError):
        gdgap.apex(crit)


def test_examples_and_fuzz():
    for n in (1, 2, 3):
        assert all(ok for (_, _, _, ok) in gdgap.run_example(n))
    ok, trials, failures = gdgap.run_fuzz(trials=25, seed=7)
    assert (ok, trials, failures) == (25, 25, [])


def test_special_reports():
    e = gdgap.equilateral_gap(4, "1/2")
    assert str(e.w3) == "4" and str(e.R) == "13/6" and str(e.d2) == "16/9"
    assert e.squared_gap.is_zero()
    assert str(gdgap.planar_critical_sq("2/5")) == "6/25"
    rep = gdgap.pech_euler(3, 4, 5)
    assert rep.heronian and str(rep.d2) == "5/4" and rep.euler_margin_sign == 1
