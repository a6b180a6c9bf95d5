#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "cdc/model.hpp"

namespace cdc {

/// Transmission/reflection/loss versus input-cavity detuning
/// delta = omega_l - (omega_e + omega_o)/2, on a strictly increasing grid.
/// Pointwise T + R + L = 1 (flux balance of the linear network).
struct Spectrum {
  std::vector<double> delta_grid;
  std::vector<double> T;
  std::vector<double> R;
  std::vector<double> L;
};

/// Evaluates the steady state on a uniform detuning grid. Deterministic;
/// solver singularities are rethrown with the offending delta attached.
Spectrum sweep(const ValidatedParams& p, SpinState spin, double delta_min, double delta_max,
               int n_points);

struct Peak {
  double delta = 0.0;
  double height = 0.0;
};

/// Strict local maxima of R ordered by delta. Plateaus collapse to their
/// midpoint; a candidate survives if its topographic prominence is at least
/// min_prominence * max(R).
std::vector<Peak> find_peaks(const Spectrum& spec, double min_prominence = 0.01);

/// CSV with header `delta,T,R,L`, one row per grid point, shortest
/// round-trip float formatting. Byte-stable across runs.
void emit(const Spectrum& spec, std::ostream& os);
void emit(const Spectrum& spec, const std::filesystem::path& destination);

} // namespace cdc
