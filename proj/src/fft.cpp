#include "detail/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace cdc::detail {

namespace {

// FFTW plan creation mutates global planner state; executing a cached plan
// on fresh arrays is thread-safe.
std::mutex plan_mutex;

fftw_plan plan_for(int n, int sign) {
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  const auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::complex<double>> dummy(static_cast<std::size_t>(n));
  fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(dummy.data()),
                                 reinterpret_cast<fftw_complex*>(dummy.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(key, p);
  return p;
}

} // namespace

void fft(const std::complex<double>* in, std::complex<double>* out, int n, bool inverse) {
  if (n <= 0) throw std::invalid_argument("fft size must be positive");
  fftw_plan p = plan_for(n, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
  // fftw_execute_dft does not modify the input array for out-of-place runs
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in, bool inverse) {
  std::vector<std::complex<double>> out(in.size());
  fft(in.data(), out.data(), static_cast<int>(in.size()), inverse);
  return out;
}

std::vector<double> fft_omega_grid(int n, double dt) {
  std::vector<double> w(static_cast<std::size_t>(n));
  const double dw = 2.0 * std::numbers::pi / (n * dt);
  for (int k = 0; k < n; ++k) w[k] = (k <= (n - 1) / 2 ? k : k - n) * dw;
  return w;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace cdc::detail
