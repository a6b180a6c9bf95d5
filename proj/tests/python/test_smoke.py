"""Smoke tests for the python bindings."""

import math

import pytest

import cdcsim


def test_case_preset_and_steady_state():
    params, omega_l = cdcsim.case_params("I", 30.0)
    assert params.kappa_e == pytest.approx(30.1)
    assert params.gamma == pytest.approx(1.001)
    up = cdcsim.solve_general(params, omega_l, cdcsim.SpinState.Up)
    down = cdcsim.solve_general(params, omega_l, cdcsim.SpinState.Down)
    assert up.t.real == pytest.approx(0.96718266094853034, abs=1e-12)
    assert down.t.real == pytest.approx(-0.99335548172757471, abs=1e-12)
    assert abs(up.r) < 1e-12
    assert down.sigma == 0


def test_validation_errors():
    p = cdcsim.SystemParams()
    p.kappa_e0 = -1.0
    with pytest.raises(ValueError):
        cdcsim.validate(p)


def test_flux_balance_closes():
    p = cdcsim.SystemParams()
    p.kappa_e0 = p.kappa_o0 = 1.0
    p.kappa_e1 = p.kappa_o1 = 20.0
    p.gamma_p = 0.1
    p.g_e = 10.0
    vp = cdcsim.validate(p)
    state = cdcsim.solve_general(vp, 0.0, cdcsim.SpinState.Up)
    assert abs(state.r) ** 2 == pytest.approx(0.87010150066819114, abs=1e-10)
    flux = cdcsim.flux_balance(state)
    assert abs(flux.residual) < 1e-10


def test_spectrum_sweep_and_peaks():
    p = cdcsim.SystemParams()
    p.kappa_e0 = p.kappa_o0 = 0.05
    p.kappa_e1 = p.kappa_o1 = 1.0
    p.gamma_p = 0.005
    p.g_e = 10.0
    spec = cdcsim.sweep(cdcsim.validate(p), cdcsim.SpinState.Up, -20.0, 20.0, 401)
    assert len(spec.delta_grid) == 401
    assert all(abs(t + r + l - 1.0) < 1e-10 for t, r, l in zip(spec.T, spec.R, spec.L))
    peaks = cdcsim.find_peaks(spec)
    assert len(peaks) == 3


def test_q_to_kappa():
    assert cdcsim.q_to_kappa(1e6, 1550e-9) == pytest.approx(0.60762953784156559, rel=1e-12)


def test_pulse_round_trip():
    pulse = cdcsim.gaussian_pulse(1.0, 0.0, 8.0, 512)
    norm = sum(abs(v) ** 2 for v in pulse.envelope_t) * (
        pulse.time_grid[1] - pulse.time_grid[0]
    )
    assert norm == pytest.approx(1.0, abs=1e-12)
    p = cdcsim.SystemParams()
    p.kappa_e0 = p.kappa_o0 = 1.0
    p.kappa_e1 = p.kappa_o1 = 9.0
    p.gamma_p = 1.5
    out = cdcsim.propagate_frequency(cdcsim.validate(p), cdcsim.SpinState.Down, pulse)
    assert out.norm_t + out.norm_r <= 1.0 + 1e-10


def test_gate_fidelity_and_concurrence():
    params, omega_l = cdcsim.case_params("I")
    amps = cdcsim.conditional_amplitudes(params, omega_l)
    assert cdcsim.fidelity(amps) == pytest.approx(0.98026907133805252, abs=1e-10)
    assert cdcsim.fidelity(amps, "probability") == pytest.approx(
        cdcsim.fidelity(amps) ** 2
    )
    state = cdcsim.apply(cdcsim.gate_matrix(amps), [0.5, 0.5, 0.5, 0.5])
    assert cdcsim.concurrence(state) >= 0.95
    bell = cdcsim.apply(cdcsim.ideal_cz(), [0.5, 0.5, 0.5, 0.5])
    assert cdcsim.concurrence(bell) == pytest.approx(1.0, abs=1e-12)


def test_truth_table():
    rows = cdcsim.truth_table(cdcsim.ConditionalAmplitudes(1.0, -1.0))
    assert [r["input"] for r in rows] == ["h_up", "h_down", "v_up", "v_down"]
    assert [r["amplitude"] for r in rows] == [1.0, -1.0, 1.0, 1.0]
    assert all(r["deviation"] == 0.0 for r in rows)


def test_fidelity_sweep_shape():
    grid = cdcsim.sweep_grid(3.0, 300.0, 31, True)
    x, f = cdcsim.fidelity_sweep("I", "kappa1", grid)
    assert len(x) == len(f) == 31
    assert max(f) >= 0.98
    assert math.isfinite(min(f))
