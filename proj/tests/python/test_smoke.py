import numpy as np
import pytest

msdiff = pytest.importorskip("msdiff")


def short_config(model=msdiff.Model.HOMS):
    cfg = msdiff.Config.preset("duncan-toor")
    cfg.model = model
    cfg.t_end = 0.04
    cfg.snapshot_times = [0.0, 0.0362, 0.04]
    return cfg


def test_preset_parameters():
    spec = msdiff.Config.preset().spec()
    assert spec["masses"] == pytest.approx([0.0810811, 1.13514, 1.78378], rel=5e-5)
    assert spec["diffusivities"][0, 0] == pytest.approx(6.54304, rel=5e-5)
    value, flagged = msdiff.cfl_number(msdiff.Config.preset())
    assert value == pytest.approx(0.52344, abs=1e-4)
    assert flagged


def test_run_conserves_and_closes():
    rep = msdiff.run(short_config())
    assert rep.complete
    assert rep.times == [0.0, 0.0362, 0.04]
    n0, n1 = rep.n(0), rep.n(2)
    assert n1.shape == (3, 21)
    assert np.allclose(n1.sum(axis=0), 1.0, atol=1e-12)
    w = np.full(21, 0.05)
    w[[0, -1]] = 0.025
    assert np.allclose(n0 @ w, n1 @ w, rtol=1e-12)
    assert np.allclose(rep.P(1), -0.35 * rep.n(1), atol=1e-12)


def test_gamma_third_matches_ms():
    cfg = short_config()
    cfg.set_gamma(1.0 / 3.0)
    homs = msdiff.run(cfg)
    ms = msdiff.run(cfg, msdiff.Model.MS)
    gaps = msdiff.compare_runs(ms, homs, 0.0362)
    assert max(gaps["n"] + gaps["J"] + gaps["p_total"]) <= 1e-12


def test_sweep_is_monotone():
    rows, monotone = msdiff.sweep_gamma(short_config(), [0.1, 0.2, 0.3])
    assert monotone
    assert [r[0] for r in rows] == [0.1, 0.2, 0.3]


def test_deviator_closed_form():
    p = msdiff.solve_deviator(msdiff.Config.preset(), [0.4, 0.2, 0.4])
    assert p == pytest.approx([-0.14, -0.07, -0.14], rel=1e-12)


def test_errors():
    with pytest.raises(msdiff.ConfigError):
        msdiff.Config.parse('{"preset": "duncan-toor", "dt": 3e-4}')
    with pytest.raises(msdiff.SingularSystemError):
        msdiff.solve_dense(np.zeros((2, 2)), [1.0, 2.0])
    cfg = short_config()
    cfg.strict_cfl = True
    with pytest.raises(msdiff.StabilityError):
        msdiff.run(cfg)


def test_write(tmp_path):
    rep = msdiff.run(short_config(msdiff.Model.MS))
    rep.write(tmp_path)
    header = (tmp_path / "nodes.csv").read_text().splitlines()[0]
    assert header == "t,x,species,n,P,p_total"
