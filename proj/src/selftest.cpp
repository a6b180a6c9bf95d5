#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "cdc/cli.hpp"
#include "cdc/model.hpp"
#include "cdc/steady_state.hpp"
#include "detail/fmt.hpp"

namespace cdc::cli {

namespace {

// splitmix64: portable, stable across standard libraries
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next_u64() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  bool coin() { return (next_u64() & 1ULL) != 0; }
};

SystemParams random_general(Rng& rng) {
  SystemParams p;
  p.kappa_e0 = rng.uniform(0.0, 2.0);
  p.kappa_o0 = rng.uniform(0.0, 2.0);
  p.kappa_e1 = rng.uniform(0.05, 20.0);
  p.kappa_o1 = rng.uniform(0.05, 20.0);
  p.omega_e = rng.uniform(-10.0, 10.0);
  p.omega_o = rng.uniform(-10.0, 10.0);
  p.omega_a = rng.uniform(-10.0, 10.0);
  const double ge = rng.uniform(0.0, 10.0), phe = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double go = rng.uniform(0.0, 10.0), pho = rng.uniform(0.0, 2.0 * std::numbers::pi);
  p.g_e = std::polar(ge, phe);
  p.g_o = std::polar(go, pho);
  p.gamma_s = rng.uniform(0.0, 0.5);
  p.gamma_p = rng.uniform(0.05, 5.0);
  return p;
}

SystemParams random_degenerate_symmetric(Rng& rng) {
  SystemParams p;
  p.kappa_e0 = p.kappa_o0 = rng.uniform(0.0, 2.0);
  p.kappa_e1 = p.kappa_o1 = rng.uniform(0.05, 20.0);
  p.omega_e = p.omega_o = rng.uniform(-10.0, 10.0);
  p.omega_a = rng.uniform(-10.0, 10.0);
  const Complex g_e = std::polar(rng.uniform(0.0, 10.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
  p.g_e = g_e;
  p.g_o = Complex{0.0, -1.0} * g_e;
  p.gamma_s = rng.uniform(0.0, 0.5);
  p.gamma_p = rng.uniform(0.05, 5.0);
  return p;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

} // namespace

SelfTestReport selftest(std::uint64_t seed, bool corrupt_sign_convention) {
  std::vector<Check> checks;

  {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ValidatedParams vp = validate(random_general(rng));
      const double omega_l = rng.uniform(-50.0, 50.0);
      const SpinState spin = rng.coin() ? SpinState::Up : SpinState::Down;
      const SteadyState a = solve_general(vp, omega_l, spin);
      const SteadyState b = oracle_solve(vp, omega_l, spin);
      worst = std::max(worst, std::abs(a.t - b.t));
      worst = std::max(worst, std::abs(a.r - b.r));
      worst = std::max(worst, std::abs(a.sigma - b.sigma));
    }
    checks.push_back({"oracle-equivalence", worst < 1e-12,
                      "1000 draws, max deviation " + detail::format_double(worst)});
  }

  {
    Rng rng(seed + 1);
    double worst_t = 0.0, worst_r = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const SystemParams raw = random_degenerate_symmetric(rng);
      const ValidatedParams vp = validate(raw);
      const double omega_l = rng.uniform(-50.0, 50.0);
      const SpinState spin = rng.coin() ? SpinState::Up : SpinState::Down;
      const DetuningSet d = detunings(vp, omega_l);
      const SteadyState s = solve_general(vp, omega_l, spin);
      const ClosedFormResult cf = transmission_closed_form(
          raw.kappa_e0, raw.kappa_e1, std::abs(raw.g_e), vp.gamma(), d.delta, d.Delta, spin);
      worst_t = std::max(worst_t, std::abs(s.t - cf.t));
      const Complex r = corrupt_sign_convention
                            ? Complex{0.0, 1.0} * std::sqrt(vp.kappa_e1()) * s.c_e -
                                  std::sqrt(vp.kappa_o1()) * s.c_o
                            : s.r;
      worst_r = std::max(worst_r, std::abs(r));
    }
    checks.push_back({"closed-form-equivalence", worst_t < 1e-12,
                      "1000 degenerate draws, max |dt| " + detail::format_double(worst_t)});
    checks.push_back({"reflection-nullity", worst_r < 1e-12,
                      "1000 degenerate draws, max |r| " + detail::format_double(worst_r)});
  }

  {
    Rng rng(seed + 2);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const ValidatedParams vp = validate(random_general(rng));
      const double omega_l = rng.uniform(-50.0, 50.0);
      const SpinState spin = rng.coin() ? SpinState::Up : SpinState::Down;
      const FluxReport f = flux_balance(solve_general(vp, omega_l, spin));
      worst = std::max(worst, std::abs(f.residual));
    }
    checks.push_back({"flux-balance", worst < 1e-10,
                      "1000 draws, max |residual| " + detail::format_double(worst)});
  }

  {
    Rng rng(seed + 3);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      SystemParams p = random_general(rng);
      p.kappa_e0 = p.kappa_o0 = 0.0;
      p.gamma_s = p.gamma_p = 0.0;
      const FluxReport f =
          flux_balance(solve_general(validate(p), rng.uniform(-50.0, 50.0), SpinState::Up));
      worst = std::max(worst, std::abs(f.transmitted + f.reflected - 1.0));
    }
    checks.push_back({"lossless-unitarity", worst < 1e-10,
                      "200 lossless draws, max ||t|^2+|r|^2-1| " + detail::format_double(worst)});
  }

  {
    SystemParams p;
    p.kappa_e0 = p.kappa_o0 = 0.1;
    p.kappa_e1 = p.kappa_o1 = 30.0;
    const SteadyState s = solve_general(validate(p), 0.0, SpinState::Down);
    const double expected = (30.0 - 0.1) / (30.0 + 0.1);
    const bool ok = std::arg(s.t) == std::numbers::pi && std::abs(std::abs(s.t) - expected) < 1e-12;
    checks.push_back({"phase-flip", ok,
                      "arg(t)=" + detail::format_double(std::arg(s.t)) +
                          ", |t|=" + detail::format_double(std::abs(s.t))});
  }

  SelfTestReport report;
  std::ostringstream os;
  os << "selftest seed=" << seed << (corrupt_sign_convention ? " [corrupt-sign-convention]" : "")
     << "\n";
  int failed = 0;
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    if (!c.pass) ++failed;
  }
  if (failed == 0)
    os << "selftest: all " << checks.size() << " checks passed\n";
  else
    os << "selftest: " << failed << " of " << checks.size() << " checks FAILED\n";
  report.pass = failed == 0;
  report.text = os.str();
  return report;
}

} // namespace cdc::cli
