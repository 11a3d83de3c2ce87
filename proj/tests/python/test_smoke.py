import json
import math

import pytest

import drlab


def test_presets():
    assert drlab.preset_names() == ["real-hyp", "heis", "quat"]
    g = drlab.preset("heis")
    assert (g.m_v, g.m_z, g.n) == (2, 1, 4)
    assert g.Q == pytest.approx(2.0)
    assert repr(drlab.make_group(mv=4, mz=3)) == "GroupParams(mv=4, mz=3)"
    with pytest.raises(ValueError):
        drlab.preset("nope")
    with pytest.raises(ValueError):
        drlab.GroupParams(3, 1)


def test_radius_and_density():
    rh = drlab.preset("real-hyp")
    assert drlab.radius(rh, 0.0, 0.0, math.e) == pytest.approx(1.0, abs=1e-13)
    assert drlab.radius(rh, 0.0, 0.0, 1.0) == 0.0
    assert drlab.density(rh, 1.4) == pytest.approx(4.0 * math.sinh(0.7) ** 2)


def test_phi_closed_form():
    rh = drlab.preset("real-hyp")
    got = drlab.phi(rh, 1.0, 2.0)
    assert got.real == pytest.approx(math.sin(2.0) / (2.0 * math.sinh(1.0)), rel=1e-10)
    assert abs(got.imag) < 1e-12
    # distinguished imaginary parameter: identically one
    one = drlab.phi(rh, 1j * rh.Q / 2, 5.0)
    assert one.real == pytest.approx(1.0, abs=1e-10)


def test_region_membership():
    heis = drlab.preset("heis")
    assert drlab.region_contains(heis, 0.7501, 0.0, alpha=2.0, p=4.0)
    assert not drlab.region_contains(heis, 0.7499, 0.0, alpha=2.0, p=4.0)
    # symmetric in the imaginary part
    assert drlab.region_contains(heis, 2.0, 0.8, alpha=2.0, p=4.0) == drlab.region_contains(
        heis, 2.0, -0.8, alpha=2.0, p=4.0
    )


def test_verify_returns_report_json():
    rep = json.loads(drlab.verify(suite="region"))
    assert rep["suite"] == "region"
    assert rep["passed"] is True
    assert len(rep["records"]) == 6
    names = {r["name"] for r in rep["records"]}
    assert "pole-strip-region-equivalence" in names
    for r in rep["records"]:
        assert r["pass"] is True


def test_verify_report_helper():
    rep = drlab.verify_report(suite="geometry", preset="real-hyp")
    assert rep["passed"] is True
    assert all(r["pass"] for r in rep["records"])


def test_verify_rejects_bad_config():
    with pytest.raises(ValueError):
        drlab.verify(suite="nope")
    with pytest.raises(ValueError):
        drlab.verify(suite="region", grid_scale=99)
