import math

import numpy as np
import pytest

import godel_c60 as g


def test_metric_is_symmetric_with_one_timelike_direction():
    gm = g.metric(1.0, alpha=0.8, omega=0.1, radius=1.3)
    assert gm.shape == (3, 3)
    assert np.allclose(gm, gm.T)
    assert (np.linalg.eigvalsh(gm) < 0).sum() == 1


def test_inertial_spectrum():
    s = g.spectrum(1, 0.5)
    assert s["valid"]
    assert s["lambda_plus"].real == pytest.approx(2.0)
    assert s["lambda_minus"].real == pytest.approx(-2.0)


def test_rotating_c60_roots():
    s = g.spectrum(1, 2.5, omega=0.1, defects=12)
    assert s["lambda_plus"].real == pytest.approx(4.96607311474872637, rel=1e-14)
    p = g.spectrum(1, 2.5, omega=0.1, defects=12, printed=True)
    assert p["lambda_plus"].real == pytest.approx(4.90561994894340574, rel=1e-14)


def test_shooting_matches_inertial_ladder():
    o = g.shoot(2, 1.5)
    assert o["lambda"] == pytest.approx(4.0, rel=1e-9)
    assert o["node_count"] == 2


def test_current_single_sector_and_zero_flux():
    r = g.persistent_current(0.0, defects=12, n_max=2, m_max=2.5)
    assert abs(r["I_analytic"]) < 1e-12
    r = g.persistent_current(0.9, omega=0.05, defects=4)
    assert r["I_analytic"] == pytest.approx(r["I_fd"], rel=1e-6)


def test_goedel_critical_radius():
    r = g.classify(1.0, 0.5)
    assert r["causal_class"] == "OneNoncausalRegion"
    assert r["critical_radii"][0] == pytest.approx(math.sqrt(2) * 0.881373587019543025, rel=1e-13)


def test_tables_and_errors():
    t = g.spectrum_table({"levels": {"n_max": 0, "m_max": 0.5}})
    assert t["schema"] == "godel-c60/spectrum"
    assert len(t["rows"]) == 2
    with pytest.raises(ValueError):
        g.spectrum_table({"model": {"alpah": 1}})
    with pytest.raises(ValueError):
        g.spectrum(0, 0.3)
    with pytest.raises(ArithmeticError):
        g.spectrum(0, 0.5, omega=1 / math.sqrt(8))


def test_maurer_cartan_orders():
    tf = [g.maurer_cartan_residual(1.0, h, omega=0.05, torsion_free=True) for h in (2e-3, 1e-3)]
    assert math.log2(tf[0] / tf[1]) == pytest.approx(2.0, rel=0.01)
