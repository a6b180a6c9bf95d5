#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cdc::cli {

/// Command-line entry point. Subcommands: spectrum, fidelity-sweep, pulse,
/// gate, truth-table, case-list, selftest. Returns 0 on success, 2 on bad
/// arguments or config, 1 on numerical failure.
int run(int argc, const char* const* argv);

/// Convenience overload for in-process invocation (args without argv[0]).
int run(const std::vector<std::string>& args);

struct SelfTestReport {
  bool pass = false;
  std::string text; ///< one PASS/FAIL line per invariant
};

/// Runs the oracle-equivalence, closed-form, reflection-nullity, flux-balance
/// and phase-flip checks on a seeded draw set. `corrupt_sign_convention`
/// flips the odd-mode output sign inside the reflection-nullity check (a
/// negative control: that check must then fail).
SelfTestReport selftest(std::uint64_t seed, bool corrupt_sign_convention = false);

} // namespace cdc::cli
