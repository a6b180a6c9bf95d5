#include "cdc/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "cdc/errors.hpp"
#include "cdc/steady_state.hpp"
#include "detail/fft.hpp"
#include "detail/fmt.hpp"

namespace cdc {

namespace {

constexpr Complex kI{0.0, 1.0};

// phase factor turning FFT bins into the documented transform with
// t_n = t0 + n dt: envelope_f(w) = dt e^{-i w t0} FFT[f]
std::vector<Complex> spectrum_from_time(const std::vector<Complex>& f, double t0, double dt) {
  const int n = static_cast<int>(f.size());
  auto F = detail::fft(f, false);
  const auto w = detail::fft_omega_grid(n, dt);
  for (int k = 0; k < n; ++k) F[k] *= dt * std::exp(Complex{0.0, -w[k] * t0});
  return F;
}

std::vector<Complex> time_from_spectrum(const std::vector<Complex>& F_natural, double t0,
                                        double dt) {
  const int n = static_cast<int>(F_natural.size());
  const auto w = detail::fft_omega_grid(n, dt);
  std::vector<Complex> scratch(F_natural);
  for (int k = 0; k < n; ++k) scratch[k] *= std::exp(Complex{0.0, w[k] * t0}) / (n * dt);
  return detail::fft(scratch, true);
}

// natural order <-> ascending-frequency order
template <typename T> std::vector<T> fftshift(const std::vector<T>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<T> out(v.size());
  const int half = (n + 1) / 2; // first negative bin in natural order
  std::copy(v.begin() + half, v.end(), out.begin());
  std::copy(v.begin(), v.begin() + half, out.begin() + (n - half));
  return out;
}

template <typename T> std::vector<T> ifftshift(const std::vector<T>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<T> out(v.size());
  const int half = n / 2;
  std::copy(v.begin() + half, v.end(), out.begin());
  std::copy(v.begin(), v.begin() + half, out.begin() + (n - half));
  return out;
}

double energy(const std::vector<Complex>& f, double dt) {
  double e = 0.0;
  for (const auto& v : f) e += std::norm(v);
  return e * dt;
}

} // namespace

PulseWaveform gaussian_pulse(double tau, double omega_l, double half_span, int n_samples) {
  if (!(tau > 0.0)) throw ValidationError("tau", "must be > 0");
  if (!(half_span > 0.0)) throw ValidationError("half_span", "must be > 0");
  if (!detail::is_power_of_two(n_samples) || n_samples < 4)
    throw ValidationError("n_samples", "must be a power of two (>= 4)");
  // normalized intensity is a normal density with standard deviation tau
  const double tail = std::erfc(half_span / (std::sqrt(2.0) * tau));
  if (tail > 1e-8)
    throw TruncationError("pulse tail mass outside the grid is " + detail::format_double(tail) +
                          " (> 1e-8); enlarge half_span (~>= 6 tau)");

  PulseWaveform p;
  p.omega_l = omega_l;
  const int n = n_samples;
  const double dt = 2.0 * half_span / n;
  p.time_grid.resize(n);
  p.envelope_t.resize(n);
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = -half_span + i * dt;
    p.time_grid[i] = t;
    const double v = std::exp(-t * t / (4.0 * tau * tau));
    p.envelope_t[i] = Complex{v, 0.0};
    norm2 += v * v;
  }
  const double scale = 1.0 / std::sqrt(norm2 * dt);
  for (auto& v : p.envelope_t) v *= scale;

  const auto F = spectrum_from_time(p.envelope_t, p.time_grid.front(), dt);
  p.frequency_grid = fftshift(detail::fft_omega_grid(n, dt));
  p.envelope_f = fftshift(F);
  return p;
}

PulseWaveform waveform_from_samples(std::vector<Complex> envelope, double omega_l,
                                    double half_span) {
  const int n = static_cast<int>(envelope.size());
  if (!(half_span > 0.0)) throw ValidationError("half_span", "must be > 0");
  if (!detail::is_power_of_two(n) || n < 4)
    throw ValidationError("envelope", "sample count must be a power of two (>= 4)");
  double norm2 = 0.0;
  for (const auto& v : envelope) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw ValidationError("envelope", "must be finite");
    norm2 += std::norm(v);
  }
  if (norm2 == 0.0) throw ValidationError("envelope", "zero envelope");

  PulseWaveform p;
  p.omega_l = omega_l;
  const double dt = 2.0 * half_span / n;
  const double scale = 1.0 / std::sqrt(norm2 * dt);
  p.envelope_t = std::move(envelope);
  for (auto& v : p.envelope_t) v *= scale;
  p.time_grid.resize(n);
  for (int i = 0; i < n; ++i) p.time_grid[i] = -half_span + i * dt;
  p.frequency_grid = fftshift(detail::fft_omega_grid(n, dt));
  p.envelope_f = fftshift(spectrum_from_time(p.envelope_t, -half_span, dt));
  return p;
}

OutputFields propagate_frequency(const ValidatedParams& p, SpinState spin,
                                 const PulseWaveform& pulse) {
  const int n = pulse.samples();
  const double dt = pulse.dt();
  const double t0 = pulse.time_grid.front();
  const auto w = detail::fft_omega_grid(n, dt);
  const auto F = ifftshift(pulse.envelope_f);

  std::vector<Complex> Ft(n), Fr(n);
  OutputFields out;
  const double e_in_raw = energy(pulse.envelope_t, dt);
  const double e_in = e_in_raw > 0.0 ? e_in_raw : 1.0; // zero input: fractions read 0
  double absorbed_e = 0.0, absorbed_o = 0.0, absorbed_s = 0.0;
  for (int k = 0; k < n; ++k) {
    // grid frequency w rides e^{+iwt}: it drives the system at omega_l - w
    const SteadyState st = solve_general(p, pulse.omega_l - w[k], spin);
    Ft[k] = F[k] * st.t;
    Fr[k] = F[k] * st.r;
    const double weight = std::norm(F[k]) / (n * dt); // Parseval energy in bin k
    absorbed_e += weight * st.loss_cavity_e;
    absorbed_o += weight * st.loss_cavity_o;
    absorbed_s += weight * st.loss_emitter;
  }

  out.time_grid = pulse.time_grid;
  out.input = pulse.envelope_t;
  out.transmitted = time_from_spectrum(Ft, t0, dt);
  out.reflected = time_from_spectrum(Fr, t0, dt);
  out.norm_t = energy(out.transmitted, dt) / e_in;
  out.norm_r = energy(out.reflected, dt) / e_in;
  out.absorbed_cavity_e = absorbed_e / e_in;
  out.absorbed_cavity_o = absorbed_o / e_in;
  out.absorbed_emitter = absorbed_s / e_in;
  return out;
}

OutputFields propagate_time(const ValidatedParams& p, SpinState spin, const PulseWaveform& pulse,
                            double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be > 0");
  const DetuningSet det = detunings(p, pulse.omega_l);
  const double max_rate =
      std::max({p.kappa_e(), p.kappa_o(), p.gamma(), std::abs(p.g_e()), std::abs(p.g_o()),
                std::abs(det.delta_el), std::abs(det.delta_ol), std::abs(det.delta_al)});
  if (dt * max_rate > 0.1)
    throw StepSizeError("dt=" + detail::format_double(dt) +
                        " does not resolve the fastest system rate " +
                        detail::format_double(max_rate) + " (need dt*rate <= 0.1)");

  const int n = pulse.samples();
  const double grid_dt = pulse.dt();
  int refine = 1;
  while (grid_dt / refine > dt) refine *= 2;
  const double h = grid_dt / refine;

  // band-limited interpolation of the drive onto the half-step grid
  const int m = n * refine * 2;
  const auto X = detail::fft(pulse.envelope_t, false);
  std::vector<Complex> Xp(m, Complex{0.0, 0.0});
  for (int k = 0; k < n / 2; ++k) Xp[k] = X[k];
  for (int k = n / 2 + 1; k < n; ++k) Xp[m - n + k] = X[k];
  Xp[n / 2] = 0.5 * X[n / 2];
  Xp[m - n / 2] = 0.5 * X[n / 2];
  auto drive = detail::fft(Xp, true);
  for (auto& v : drive) v /= static_cast<double>(n);

  const Complex g_e = spin == SpinState::Up ? p.g_e() : Complex{0.0, 0.0};
  const Complex g_o = spin == SpinState::Up ? p.g_o() : Complex{0.0, 0.0};
  const Complex D_e{p.kappa_e(), det.delta_el};
  const Complex D_o{p.kappa_o(), det.delta_ol};
  const Complex A{p.gamma(), det.delta_al};
  const double se = std::sqrt(p.kappa_e1());
  const double so = std::sqrt(p.kappa_o1());
  const double ke0 = p.kappa_e0(), ko0 = p.kappa_o0(), gam = p.gamma();

  // state: c_e, c_o, sigma plus three dissipated-energy accumulators,
  // integrated by the same RK4 so the ledger converges at the same order
  struct State {
    Complex ce{0.0, 0.0}, co{0.0, 0.0}, s{0.0, 0.0};
    double le = 0.0, lo = 0.0, ls = 0.0;
  };
  auto deriv = [&](const State& y, Complex in) {
    State d;
    d.ce = -D_e * y.ce - kI * g_e * y.s + kI * se * in;
    d.co = -D_o * y.co - kI * g_o * y.s + so * in;
    d.s = -A * y.s - kI * (std::conj(g_e) * y.ce + std::conj(g_o) * y.co);
    d.le = 2.0 * ke0 * std::norm(y.ce);
    d.lo = 2.0 * ko0 * std::norm(y.co);
    d.ls = 2.0 * gam * std::norm(y.s);
    return d;
  };
  auto axpy = [](const State& y, double a, const State& d) {
    State out;
    out.ce = y.ce + a * d.ce;
    out.co = y.co + a * d.co;
    out.s = y.s + a * d.s;
    out.le = y.le + a * d.le;
    out.lo = y.lo + a * d.lo;
    out.ls = y.ls + a * d.ls;
    return out;
  };

  OutputFields out;
  out.time_grid = pulse.time_grid;
  out.input = pulse.envelope_t;
  out.transmitted.resize(n);
  out.reflected.resize(n);

  State y;
  for (int i = 0; i < n; ++i) {
    out.transmitted[i] = pulse.envelope_t[i] + kI * se * y.ce - so * y.co;
    out.reflected[i] = kI * se * y.ce + so * y.co;
    for (int j = 0; j < refine; ++j) {
      const int base = (i * refine + j) * 2;
      const Complex d0 = drive[base];
      const Complex dh = drive[base + 1];
      const Complex d1 = drive[(base + 2) % m];
      const State k1 = deriv(y, d0);
      const State k2 = deriv(axpy(y, 0.5 * h, k1), dh);
      const State k3 = deriv(axpy(y, 0.5 * h, k2), dh);
      const State k4 = deriv(axpy(y, h, k3), d1);
      State sum = axpy(y, h / 6.0, k1);
      sum = axpy(sum, h / 3.0, k2);
      sum = axpy(sum, h / 3.0, k3);
      y = axpy(sum, h / 6.0, k4);
    }
  }

  const double e_in_raw = energy(pulse.envelope_t, grid_dt);
  const double e_in = e_in_raw > 0.0 ? e_in_raw : 1.0; // zero input: fractions read 0
  out.norm_t = energy(out.transmitted, grid_dt) / e_in;
  out.norm_r = energy(out.reflected, grid_dt) / e_in;
  out.absorbed_cavity_e = y.le / e_in;
  out.absorbed_cavity_o = y.lo / e_in;
  out.absorbed_emitter = y.ls / e_in;
  return out;
}

void emit(const OutputFields& f, std::ostream& os) {
  os << "t,re_in,im_in,re_out_t,im_out_t,re_out_r,im_out_r\n";
  for (std::size_t i = 0; i < f.time_grid.size(); ++i) {
    os << detail::format_double(f.time_grid[i]) << ',' << detail::format_double(f.input[i].real())
       << ',' << detail::format_double(f.input[i].imag()) << ','
       << detail::format_double(f.transmitted[i].real()) << ','
       << detail::format_double(f.transmitted[i].imag()) << ','
       << detail::format_double(f.reflected[i].real()) << ','
       << detail::format_double(f.reflected[i].imag()) << '\n';
  }
}

void emit(const OutputFields& f, const std::filesystem::path& destination) {
  std::ofstream os(destination, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + destination.string());
  emit(f, os);
  os.flush();
  if (!os) throw IoError("write failure: " + destination.string());
}

} // namespace cdc
