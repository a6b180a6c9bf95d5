#include "cdc/gate.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "cdc/errors.hpp"
#include "cdc/steady_state.hpp"
#include "detail/fft.hpp"
#include "detail/fmt.hpp"

namespace cdc {

namespace {

void require_gate_convention(const ValidatedParams& p) {
  const Complex expected = Complex{0.0, -1.0} * p.g_e();
  const double scale = std::max(1.0, std::abs(p.g_e()));
  if (std::abs(p.g_o() - expected) > 1e-12 * scale)
    throw ValidationError("g_o", "gate evaluation requires the coupling convention g_o = -i*g_e");
}

} // namespace

ConditionalAmplitudes conditional_amplitudes(const ValidatedParams& p, double omega_l) {
  require_gate_convention(p);
  const SteadyState up = solve_general(p, omega_l, SpinState::Up);
  const SteadyState down = solve_general(p, omega_l, SpinState::Down);
  return ConditionalAmplitudes{up.t, down.t, up.r, down.r};
}

ConditionalAmplitudes conditional_amplitudes(const ValidatedParams& p,
                                             const PulseWaveform& pulse) {
  require_gate_convention(p);
  ConditionalAmplitudes eff;
  double total = 0.0;
  for (std::size_t k = 0; k < pulse.frequency_grid.size(); ++k) {
    const double weight = std::norm(pulse.envelope_f[k]);
    if (weight == 0.0) continue;
    // grid frequency w rides e^{+iwt}: laser frequency omega_l - w
    const double omega = pulse.omega_l - pulse.frequency_grid[k];
    const SteadyState up = solve_general(p, omega, SpinState::Up);
    const SteadyState down = solve_general(p, omega, SpinState::Down);
    eff.t_up += weight * up.t;
    eff.t_down += weight * down.t;
    eff.r_up += weight * up.r;
    eff.r_down += weight * down.r;
    total += weight;
  }
  if (total == 0.0) throw ValidationError("pulse", "empty spectrum");
  eff.t_up /= total;
  eff.t_down /= total;
  eff.r_up /= total;
  eff.r_down /= total;
  return eff;
}

double fidelity(const ConditionalAmplitudes& amps, FidelityDefinition definition) {
  const double f = 0.5 * std::abs(amps.t_up - amps.t_down);
  return definition == FidelityDefinition::AmplitudeOverlap ? f : f * f;
}

FidelityCurve fidelity_sweep(CaseId id, SweepVariable variable, const std::vector<double>& grid,
                             double g) {
  FidelityCurve curve;
  curve.variable = variable;
  curve.x = grid;
  curve.F.reserve(grid.size());
  const CasePreset base = case_params(id, g);
  for (double x : grid) {
    if (!(x > 0.0))
      throw ValidationError(variable == SweepVariable::Kappa1 ? "kappa1" : "gamma",
                            "sweep values must be > 0");
    SystemParams p = base.params.raw();
    if (variable == SweepVariable::Kappa1) {
      const double ratio = base.params.kappa_o1() / base.params.kappa_e1();
      p.kappa_e1 = x;
      p.kappa_o1 = x * ratio;
    } else {
      // composite dephasing gamma = gamma_s/2 + gamma_p = x
      if (x >= p.gamma_s / 2.0) {
        p.gamma_p = x - p.gamma_s / 2.0;
      } else {
        p.gamma_s = 0.0;
        p.gamma_p = x;
      }
    }
    curve.F.push_back(fidelity(conditional_amplitudes(validate(p), base.omega_l)));
  }
  return curve;
}

std::vector<double> sweep_grid(double min, double max, int points, bool log_scale) {
  if (points < 2) throw ValidationError("points", "need at least 2 grid points");
  if (!(min < max)) throw ValidationError("min", "must be < max");
  if (log_scale && !(min > 0.0)) throw ValidationError("min", "log grid requires min > 0");
  std::vector<double> g(points);
  if (log_scale) {
    const double l0 = std::log(min), l1 = std::log(max);
    for (int i = 0; i < points; ++i)
      g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  } else {
    for (int i = 0; i < points; ++i) g[i] = min + (max - min) * i / (points - 1);
  }
  g.front() = min;
  g.back() = max;
  return g;
}

void emit(const FidelityCurve& curve, std::ostream& os) {
  os << "x,F\n";
  for (std::size_t i = 0; i < curve.x.size(); ++i)
    os << detail::format_double(curve.x[i]) << ',' << detail::format_double(curve.F[i]) << '\n';
}

void emit(const FidelityCurve& curve, const std::filesystem::path& destination) {
  std::ofstream os(destination, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + destination.string());
  emit(curve, os);
  os.flush();
  if (!os) throw IoError("write failure: " + destination.string());
}

GateMatrix gate_matrix(const ConditionalAmplitudes& amps) {
  GateMatrix m{};
  m[0][0] = amps.t_up;
  m[1][1] = amps.t_down;
  m[2][2] = Complex{1.0, 0.0};
  m[3][3] = Complex{1.0, 0.0};
  return m;
}

GateMatrix ideal_cz() {
  return gate_matrix(ConditionalAmplitudes{Complex{1.0, 0.0}, Complex{-1.0, 0.0}, {}, {}});
}

GateMatrix identity_gate() {
  return gate_matrix(ConditionalAmplitudes{Complex{1.0, 0.0}, Complex{1.0, 0.0}, {}, {}});
}

GateMatrix photon_rotation(const Mat2& p) {
  GateMatrix m{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m[2 * i][2 * j] = p[i][j];
      m[2 * i + 1][2 * j + 1] = p[i][j];
    }
  return m;
}

GateMatrix spin_rotation(const Mat2& s) {
  GateMatrix m{};
  for (int b = 0; b < 2; ++b)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m[2 * b + i][2 * b + j] = s[i][j];
  return m;
}

Mat2 hadamard() {
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return Mat2{{{Complex{inv_sqrt2, 0.0}, Complex{inv_sqrt2, 0.0}},
               {Complex{inv_sqrt2, 0.0}, Complex{-inv_sqrt2, 0.0}}}};
}

GateMatrix compose(const GateMatrix& a, const GateMatrix& b) {
  GateMatrix m{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

TwoQubitState apply(const GateMatrix& op, const TwoQubitState& state) {
  TwoQubitState out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.a[i] += op[i][j] * state.a[j];
  return out;
}

double concurrence(const TwoQubitState& state) {
  double norm2 = 0.0;
  for (const auto& v : state.a) norm2 += std::norm(v);
  if (norm2 == 0.0) throw ValidationError("state", "zero-norm state has no concurrence");
  return 2.0 * std::abs(state.a[0] * state.a[3] - state.a[1] * state.a[2]) / norm2;
}

TruthTable truth_table(const ConditionalAmplitudes& amps) {
  return TruthTable{
      TruthTableRow{"h_up", amps.t_up, Complex{1.0, 0.0}, std::abs(amps.t_up - 1.0)},
      TruthTableRow{"h_down", amps.t_down, Complex{-1.0, 0.0}, std::abs(amps.t_down + 1.0)},
      TruthTableRow{"v_up", Complex{1.0, 0.0}, Complex{1.0, 0.0}, 0.0},
      TruthTableRow{"v_down", Complex{1.0, 0.0}, Complex{1.0, 0.0}, 0.0},
  };
}

TruthTable ideal_truth_table() {
  return truth_table(ConditionalAmplitudes{Complex{1.0, 0.0}, Complex{-1.0, 0.0}, {}, {}});
}

} // namespace cdc
