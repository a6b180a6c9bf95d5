#pragma once

#include <cstdint>
#include <numbers>

#include "cdc/model.hpp"

namespace cdc::test {

// splitmix64-based draws, stable across standard libraries
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

// draw ranges used by the randomized suites: moderate rate ratios so the
// 3x3 solve stays well conditioned (tolerances in the tests assume this)
inline SystemParams random_general(Rng& rng) {
  SystemParams p;
  p.kappa_e0 = rng.uniform(0.0, 2.0);
  p.kappa_o0 = rng.uniform(0.0, 2.0);
  p.kappa_e1 = rng.uniform(0.05, 20.0);
  p.kappa_o1 = rng.uniform(0.05, 20.0);
  p.omega_e = rng.uniform(-10.0, 10.0);
  p.omega_o = rng.uniform(-10.0, 10.0);
  p.omega_a = rng.uniform(-10.0, 10.0);
  p.g_e = std::polar(rng.uniform(0.0, 10.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
  p.g_o = std::polar(rng.uniform(0.0, 10.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
  p.gamma_s = rng.uniform(0.0, 0.5);
  p.gamma_p = rng.uniform(0.05, 5.0);
  return p;
}

inline SystemParams random_degenerate_symmetric(Rng& rng) {
  SystemParams p;
  p.kappa_e0 = p.kappa_o0 = rng.uniform(0.0, 2.0);
  p.kappa_e1 = p.kappa_o1 = rng.uniform(0.05, 20.0);
  p.omega_e = p.omega_o = rng.uniform(-10.0, 10.0);
  p.omega_a = rng.uniform(-10.0, 10.0);
  p.g_e = std::polar(rng.uniform(0.0, 10.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
  p.g_o = Complex{0.0, -1.0} * p.g_e;
  p.gamma_s = rng.uniform(0.0, 0.5);
  p.gamma_p = rng.uniform(0.05, 5.0);
  return p;
}

} // namespace cdc::test
