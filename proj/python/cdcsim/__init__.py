"""Cavity-dipole-cavity QED simulator.

Steady-state scattering of a standing-wave cavity mode pair coupled to a
single spin-selective dipole, detuning spectra, Gaussian pulse propagation
and the spin-photon conditional-phase gate.
"""

from ._core import (
    ConditionalAmplitudes,
    DetuningSet,
    FluxReport,
    OutputFields,
    Peak,
    PulseWaveform,
    Spectrum,
    SpinState,
    SteadyState,
    SupermodeView,
    SystemParams,
    ValidatedParams,
    __version__,
    apply,
    case_params,
    compose,
    concurrence,
    conditional_amplitudes,
    detunings,
    fidelity,
    fidelity_sweep,
    find_peaks,
    flux_balance,
    gate_matrix,
    gaussian_pulse,
    hadamard,
    ideal_cz,
    identity_gate,
    oracle_solve,
    photon_rotation,
    propagate_frequency,
    propagate_time,
    q_to_kappa,
    solve_general,
    spin_rotation,
    supermode_transform,
    sweep,
    sweep_grid,
    transmission_closed_form,
    truth_table,
    validate,
    waveform_from_samples,
    write_spectrum_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
