from fractions import Fraction

import pytest

import zetalab as z


def test_library():
    assert "sphere2_dirac" in z.library_names()
    m = z.Model.library("sphere2_dirac")
    assert (m.dimension, m.order) == (2, 1)


def test_sphere_residues():
    m = z.Model.library("sphere2_dirac").shift(Fraction(1, 3))
    assert z.residue(m, "eta", 1) == Fraction(-4, 3)
    assert z.residue(m, "zeta_abs", 2) == 4
    assert z.residue(m, "eta", 2) == 0


def test_eta_at_zero():
    m = z.Model.library("circle_dirac_shift", "1/3")
    value, approx = z.evaluate(m, "eta", 0)
    assert value == Fraction(1, 3)
    assert abs(approx - 1 / 3) < 1e-15


def test_pole_error():
    with pytest.raises(z.PoleError):
        z.evaluate(z.Model.library("circle_dirac"), "zeta_abs", 1)


def test_model_round_trip():
    m = z.Model.library("sphere3_dirac").ec_perturb("1/3", "1/10")
    assert z.Model.from_json(m.to_json()) == m
    with pytest.raises(z.ParseError):
        z.Model.from_json("{broken")


def test_pole_table():
    rows = z.pole_table(z.Model.library("circle_laplacian"))
    abs_rows = {r["sigma"]: r["residue"] for r in rows if r["function"] == "zeta_abs"}
    assert abs_rows[Fraction(1, 2)] == 1


def test_cross_engine():
    for a in ("0", "1/3"):
        p_abs, _ = z.Symbol.circle(a).abs_and_sign()
        assert z.ncr(p_abs.power(-1)) == 2
        assert z.residue(z.Model.library("circle_dirac_shift", a), "zeta_abs", 1) == 2


def test_symbol_algebra():
    a = z.Symbol.circle("1/2")
    inv = a.parametrix()
    assert (a @ inv).order == 0
    assert z.ncr(a @ inv) == 0
    assert a.is_differential() and a.is_odd_class()


def test_checks():
    verdicts = z.run_checks(["sphere_perturbation", "cross_engine"])
    assert [v["id"] for v in verdicts] == ["sphere_perturbation", "cross_engine"]
    assert all(v["pass"] and v["tolerance"] == "0" for v in verdicts)
    with pytest.raises(z.DomainError):
        z.run_checks(["nosuch"])
