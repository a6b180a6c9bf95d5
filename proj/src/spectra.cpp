#include "cdc/spectra.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/steady_state.hpp"
#include "detail/fmt.hpp"

namespace cdc {

Spectrum sweep(const ValidatedParams& p, SpinState spin, double delta_min, double delta_max,
               int n_points) {
  if (n_points < 2) throw ValidationError("n_points", "need at least 2 grid points");
  if (!(delta_min < delta_max)) throw ValidationError("delta_min", "must be < delta_max");
  const double omega_c = 0.5 * (p.omega_e() + p.omega_o());
  const double step = (delta_max - delta_min) / (n_points - 1);

  Spectrum s;
  s.delta_grid.resize(n_points);
  s.T.resize(n_points);
  s.R.resize(n_points);
  s.L.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double delta = delta_min + i * step;
    s.delta_grid[i] = delta;
    SteadyState st;
    try {
      st = solve_general(p, omega_c + delta, spin);
    } catch (const SingularSystemError& e) {
      throw SingularSystemError(std::string(e.what()) + " (at delta=" +
                                detail::format_double(delta) + ")");
    }
    s.T[i] = std::norm(st.t);
    s.R[i] = std::norm(st.r);
    s.L[i] = st.loss_cavity_e + st.loss_cavity_o + st.loss_emitter;
  }
  return s;
}

std::vector<Peak> find_peaks(const Spectrum& spec, double min_prominence) {
  const auto& y = spec.R;
  const auto& x = spec.delta_grid;
  const int n = static_cast<int>(y.size());
  if (n < 3) throw ValidationError("spectrum", "need at least 3 points to locate peaks");
  if (x.size() != y.size()) throw ValidationError("spectrum", "grid/array length mismatch");

  // candidate maxima: strictly above both neighbours, plateaus collapsed
  // to their midpoint
  std::vector<int> cand;
  int i = 1;
  while (i < n - 1) {
    if (y[i] > y[i - 1]) {
      int j = i;
      while (j < n - 1 && y[j + 1] == y[i]) ++j;
      if (j < n - 1 && y[j + 1] < y[i]) cand.push_back((i + j) / 2);
      i = j + 1;
    } else {
      ++i;
    }
  }

  const double y_max = *std::max_element(y.begin(), y.end());
  const double threshold = min_prominence * y_max;
  std::vector<Peak> peaks;
  for (int p : cand) {
    double left_base = y[p];
    for (int k = p - 1; k >= 0 && y[k] <= y[p]; --k) left_base = std::min(left_base, y[k]);
    double right_base = y[p];
    for (int k = p + 1; k < n && y[k] <= y[p]; ++k) right_base = std::min(right_base, y[k]);
    const double prominence = y[p] - std::max(left_base, right_base);
    if (prominence >= threshold) peaks.push_back(Peak{x[p], y[p]});
  }
  return peaks;
}

void emit(const Spectrum& spec, std::ostream& os) {
  os << "delta,T,R,L\n";
  for (std::size_t i = 0; i < spec.delta_grid.size(); ++i) {
    os << detail::format_double(spec.delta_grid[i]) << ',' << detail::format_double(spec.T[i])
       << ',' << detail::format_double(spec.R[i]) << ',' << detail::format_double(spec.L[i])
       << '\n';
  }
}

void emit(const Spectrum& spec, const std::filesystem::path& destination) {
  std::ofstream os(destination, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + destination.string());
  emit(spec, os);
  os.flush();
  if (!os) throw IoError("write failure: " + destination.string());
}

} // namespace cdc
