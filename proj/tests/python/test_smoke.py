import math

import pytest

try:
    import _tempcert as tc
except ImportError:
    import tempcert as tc


def test_version():
    assert tc.__version__ == "0.1.0"


def test_tau_canonical():
    rep = tc.tau(3)
    assert rep["tau_stats"] == pytest.approx(8.0, abs=1e-9)
    assert rep["tau_operator"] == pytest.approx(8.0, abs=1e-9)
    assert rep["quantum_max"] == pytest.approx(8.0, abs=1e-12)
    assert rep["tau_stats"] > rep["classical_bound"]


def test_classical_bound_routes():
    rep = tc.classical_bound(2)
    assert rep["closed"] == pytest.approx(2.0 * math.sqrt(2.0), abs=1e-12)
    assert rep["chained"] == pytest.approx(rep["closed"], abs=1e-12)
    assert rep["enumerated"] == pytest.approx(rep["closed"], abs=1e-12)


def test_entropy():
    assert tc.entropy(2) == pytest.approx(1.0, abs=1e-9)
    assert tc.pair_entropy(3, 2, 1) == pytest.approx(tc.entropy(3), abs=1e-9)


def test_sos_residuals():
    rep = tc.sos_residuals(4)
    assert rep["primary"] < 1e-9
    assert rep["alt"] < 1e-9


def test_robustness_trial():
    rep = tc.robustness_trial(2, 1e-3, 42)
    assert rep["all_bounds_hold"]
    assert rep["sharp_bounds_hold"]
    assert rep["epsilon"] >= 0.0


def test_certify_round_trip(tmp_path):
    path = str(tmp_path / "quartet.json")
    tc.save_canonical_quartet(path, 3)
    rep = tc.certify_file(path)
    assert rep["verdict"] == "certified"
    assert rep["epsilon"] < 1e-9


def test_certify_canonical():
    rep = tc.certify_canonical(2)
    assert rep["verdict"] == "certified"
    assert rep["fingerprint_distance"] < 1e-9


def test_nonuniqueness():
    rep = tc.nonuniqueness(0.3, 1.1)
    assert rep["tau_planar"] == pytest.approx(4.0, abs=1e-9)
    assert rep["tau_skew"] == pytest.approx(4.0, abs=5e-3)
    assert rep["overlap_mismatch"] > 0.2
    assert not rep["connecting_unitary_exists"]


def test_invalid_dimension_raises():
    with pytest.raises(ValueError):
        tc.tau(1)


def test_quartet_unitaries_shape():
    mats = tc.canonical_quartet_unitaries(3)
    assert len(mats) == 4
    for m in mats:
        assert m.shape == (3, 3)
