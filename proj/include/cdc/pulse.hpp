#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cdc/model.hpp"

namespace cdc {

// Transform pair convention (forward sign e^{-i w t}):
//   envelope_f(w_k) = dt * sum_n envelope_t(t_n) e^{-i w_k t_n}
//   envelope_t(t_n) = 1/(N dt) * sum_k envelope_f(w_k) e^{+i w_k t_n}
// A component at grid frequency w therefore evolves as e^{+i w t} on top of
// the carrier, i.e. it drives the system at laser frequency omega_l - w.

/// A normalized complex pulse envelope in paired time/frequency
/// representations. sum |envelope_t|^2 dt = 1 (single-photon normalization).
struct PulseWaveform {
  std::vector<double> time_grid;      ///< uniform, ns; covers [-half, +half)
  std::vector<Complex> envelope_t;
  std::vector<double> frequency_grid; ///< rad/ns, ascending (fftshifted)
  std::vector<Complex> envelope_f;
  double omega_l = 0.0;               ///< carrier frequency offset

  double dt() const { return time_grid[1] - time_grid[0]; }
  int samples() const { return static_cast<int>(time_grid.size()); }
};

/// Gaussian envelope exp(-t^2/(4 tau^2)), normalized; intensity standard
/// deviation tau in time and 1/(2 tau) in frequency. The grid covers
/// [-half_span, +half_span) with n_samples points (a power of two).
/// Throws TruncationError when the intensity tail mass outside the span
/// exceeds 1e-8 (half_span below about 5.8 tau).
PulseWaveform gaussian_pulse(double tau, double omega_l, double half_span, int n_samples);

/// Arbitrary envelope on a uniform power-of-two grid covering
/// [-half_span, +half_span): normalizes to unit L2 norm and fills the
/// frequency representation. For custom pulse shapes.
PulseWaveform waveform_from_samples(std::vector<Complex> envelope, double omega_l,
                                    double half_span);

/// Scattered output time series for one input pulse at port 1, per unit
/// input energy.
struct OutputFields {
  std::vector<double> time_grid;
  std::vector<Complex> input;
  std::vector<Complex> transmitted; ///< port-2 output envelope
  std::vector<Complex> reflected;   ///< port-1 output envelope
  double norm_t = 0.0;              ///< transmitted energy fraction
  double norm_r = 0.0;              ///< reflected energy fraction
  double absorbed_cavity_e = 0.0;   ///< dissipated energy fractions
  double absorbed_cavity_o = 0.0;
  double absorbed_emitter = 0.0;
};

/// Multiplies each spectral component by t(delta), r(delta) from the
/// steady-state solver and transforms back.
OutputFields propagate_frequency(const ValidatedParams& p, SpinState spin,
                                 const PulseWaveform& pulse);

/// Integrates the three driven linear amplitude equations with classical
/// fixed-step fourth-order Runge-Kutta, sampling outputs through the same
/// port relations as the steady state. The drive is band-limited-interpolated
/// onto the integration grid. Throws StepSizeError before integrating when
/// dt * max(kappa, |g|, gamma, |detuning|) > 0.1.
OutputFields propagate_time(const ValidatedParams& p, SpinState spin, const PulseWaveform& pulse,
                            double dt);

/// CSV with header `t,re_in,im_in,re_out_t,im_out_t,re_out_r,im_out_r`.
void emit(const OutputFields& fields, std::ostream& os);
void emit(const OutputFields& fields, const std::filesystem::path& destination);

} // namespace cdc
