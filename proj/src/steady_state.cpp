#include "cdc/steady_state.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string describe(const ValidatedParams& p, double omega_l) {
  std::ostringstream os;
  os << "kappa_e=" << p.kappa_e() << " kappa_o=" << p.kappa_o() << " gamma=" << p.gamma()
     << " g_e=(" << p.g_e().real() << "," << p.g_e().imag() << ")"
     << " g_o=(" << p.g_o().real() << "," << p.g_o().imag() << ")"
     << " omega_e=" << p.omega_e() << " omega_o=" << p.omega_o() << " omega_a=" << p.omega_a()
     << " omega_l=" << omega_l;
  return os.str();
}

SteadyState finish(const ValidatedParams& p, Complex c_e, Complex c_o, Complex sigma) {
  SteadyState s;
  s.c_e = c_e;
  s.c_o = c_o;
  s.sigma = sigma;
  const double se = std::sqrt(p.kappa_e1());
  const double so = std::sqrt(p.kappa_o1());
  s.t = 1.0 + kI * se * c_e - so * c_o;
  s.r = kI * se * c_e + so * c_o;
  s.loss_cavity_e = 2.0 * p.kappa_e0() * std::norm(c_e);
  s.loss_cavity_o = 2.0 * p.kappa_o0() * std::norm(c_o);
  s.loss_emitter = 2.0 * p.gamma() * std::norm(sigma);
  return s;
}

} // namespace

SteadyState solve_general(const ValidatedParams& p, double omega_l, SpinState spin) {
  const DetuningSet d = detunings(p, omega_l);
  const Complex g_e = spin == SpinState::Up ? p.g_e() : Complex{0.0, 0.0};
  const Complex g_o = spin == SpinState::Up ? p.g_o() : Complex{0.0, 0.0};
  const Complex D_e{p.kappa_e(), d.delta_el};
  const Complex D_o{p.kappa_o(), d.delta_ol};
  const Complex A{p.gamma(), d.delta_al};
  const Complex b1 = kI * std::sqrt(p.kappa_e1());
  const Complex b2{std::sqrt(p.kappa_o1()), 0.0};

  if (g_e == 0.0 && g_o == 0.0) {
    // Decoupled dipole: the cavity block separates and sigma is exactly 0.
    if (D_e == 0.0 || D_o == 0.0)
      throw SingularSystemError("undamped cavity mode on resonance: " + describe(p, omega_l));
    return finish(p, b1 / D_e, b2 / D_o, Complex{0.0, 0.0});
  }

  // Cramer solution of the 3x3 system.
  const double ge2 = std::norm(g_e);
  const double go2 = std::norm(g_o);
  const Complex det = A * D_e * D_o + go2 * D_e + ge2 * D_o;
  if (det == 0.0)
    throw SingularSystemError("singular steady-state system: " + describe(p, omega_l));
  const Complex c_e = (b1 * (A * D_o + go2) - b2 * g_e * std::conj(g_o)) / det;
  const Complex c_o = (b2 * (A * D_e + ge2) - b1 * g_o * std::conj(g_e)) / det;
  const Complex sigma = -kI * (b1 * D_o * std::conj(g_e) + b2 * D_e * std::conj(g_o)) / det;
  return finish(p, c_e, c_o, sigma);
}

SteadyState oracle_solve(const ValidatedParams& p, double omega_l, SpinState spin) {
  const DetuningSet d = detunings(p, omega_l);
  const Complex g_e = spin == SpinState::Up ? p.g_e() : Complex{0.0, 0.0};
  const Complex g_o = spin == SpinState::Up ? p.g_o() : Complex{0.0, 0.0};

  std::array<std::array<Complex, 3>, 3> m{{
      {Complex{p.kappa_e(), d.delta_el}, Complex{0.0, 0.0}, kI * g_e},
      {Complex{0.0, 0.0}, Complex{p.kappa_o(), d.delta_ol}, kI * g_o},
      {kI * std::conj(g_e), kI * std::conj(g_o), Complex{p.gamma(), d.delta_al}},
  }};
  std::array<Complex, 3> rhs{kI * std::sqrt(p.kappa_e1()), Complex{std::sqrt(p.kappa_o1()), 0.0},
                             Complex{0.0, 0.0}};

  // Gaussian elimination with partial pivoting.
  for (int k = 0; k < 3; ++k) {
    int pivot = k;
    double best = std::abs(m[k][k]);
    for (int i = k + 1; i < 3; ++i) {
      const double a = std::abs(m[i][k]);
      if (a > best) {
        best = a;
        pivot = i;
      }
    }
    if (best == 0.0) {
      // A zero column is singular except for a fully decoupled, undamped,
      // undriven emitter (column 2 is sigma; row swaps never move columns):
      // there the physical solution is sigma = 0.
      bool row_empty = true;
      for (int j = 0; j < 3; ++j) row_empty = row_empty && (m[k][j] == 0.0);
      if (k == 2 && row_empty && rhs[k] == 0.0) {
        m[k][k] = 1.0;
        continue;
      }
      throw SingularSystemError("singular steady-state system: " + describe(p, omega_l));
    }
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      std::swap(rhs[pivot], rhs[k]);
    }
    for (int i = k + 1; i < 3; ++i) {
      const Complex f = m[i][k] / m[k][k];
      for (int j = k; j < 3; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::array<Complex, 3> x{};
  for (int i = 2; i >= 0; --i) {
    Complex acc = rhs[i];
    for (int j = i + 1; j < 3; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return finish(p, x[0], x[1], x[2]);
}

ClosedFormResult transmission_closed_form(double kappa0, double kappa1, double g_e_mag,
                                          double gamma, double delta, double Delta,
                                          SpinState spin) {
  if (!(kappa0 >= 0.0)) throw ValidationError("kappa0", "rate must be >= 0");
  if (!(kappa1 >= 0.0)) throw ValidationError("kappa1", "rate must be >= 0");
  if (!(gamma >= 0.0)) throw ValidationError("gamma", "rate must be >= 0");
  const double kappa = kappa0 + kappa1;
  const double g = spin == SpinState::Up ? g_e_mag : 0.0;

  ClosedFormResult out;
  if (g != 0.0) {
    const Complex denom{gamma, Delta - delta};
    if (denom == 0.0) {
      // lambda diverges; the dipole pins the driven supermode and the
      // cavity turns transparent.
      out.t = Complex{1.0, 0.0};
      out.dipole_dominated_limit = true;
      return out;
    }
    const Complex lambda = 2.0 * g * g / denom;
    out.t = (Complex{kappa - 2.0 * kappa1, -delta} + lambda) / (Complex{kappa, -delta} + lambda);
    return out;
  }
  const Complex denom{kappa, -delta};
  if (denom == 0.0)
    throw SingularSystemError("undamped cavity on resonance in closed-form transmission");
  out.t = Complex{kappa - 2.0 * kappa1, -delta} / denom;
  return out;
}

SupermodeView supermode_transform(const ValidatedParams& p, const SteadyState& state) {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  SupermodeView v;
  v.c_plus = (state.c_e - kI * state.c_o) * inv_sqrt2;
  v.c_minus = (state.c_e + kI * state.c_o) * inv_sqrt2;
  v.g_plus = (p.g_e() - kI * p.g_o()) * inv_sqrt2;
  v.g_minus = (p.g_e() + kI * p.g_o()) * inv_sqrt2;
  v.driven_by_port_one = Supermode::Minus;
  return v;
}

FluxReport flux_balance(const SteadyState& s) {
  FluxReport f;
  f.transmitted = std::norm(s.t);
  f.reflected = std::norm(s.r);
  f.loss_cavity_e = s.loss_cavity_e;
  f.loss_cavity_o = s.loss_cavity_o;
  f.loss_emitter = s.loss_emitter;
  f.residual =
      1.0 - f.transmitted - f.reflected - f.loss_cavity_e - f.loss_cavity_o - f.loss_emitter;
  return f;
}

} // namespace cdc
