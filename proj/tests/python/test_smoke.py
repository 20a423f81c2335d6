import math

import saddlecert


def test_verify_certificate_passes():
    report = saddlecert.verify_certificate()
    assert report["pass"] is True
    assert report["funvals_cancel"] is True
    assert report["basis_mismatch"] == []


def test_run_alternating_contracts_on_bilinear():
    rec = saddlecert.run("bilinear", "alt-nm", eta=0.2, beta=-0.5, steps=200, z0=[1.0, 0.0])
    assert rec["steps"] == 200
    assert len(rec["x"]) == 201
    assert rec["dist_sq"][-1] < rec["dist_sq"][0]
    # frozen one-step oracle: z1 = (1, 1/5)
    assert math.isclose(rec["x"][1][0], 1.0, rel_tol=1e-12)
    assert math.isclose(rec["y"][1][0], 0.2, rel_tol=1e-12)


def test_cc_bound_holds():
    out = saddlecert.check_cc_bound("bilinear", eta=0.2, beta=-0.5, steps=500, dx=2, dy=2,
                                    z0=[1.0, 0.0, 0.0, 1.0])
    assert out["pass"] is True
    assert out["measured"] <= out["bound"]


def test_fig1_ordinal(tmp_path):
    out = saddlecert.fig1(str(tmp_path))
    assert out["left_alternating_contracts"] is True
    assert out["left_simultaneous_diverges"] is True
    assert out["right_alternating_closer"] is True
    assert (tmp_path / "left_alternating.csv").exists()
