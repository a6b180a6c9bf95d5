#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cdc/errors.hpp"
#include "cdc/spectra.hpp"
#include "cdc/steady_state.hpp"
#include "test_util.hpp"

using namespace cdc;

namespace {

// gamma = kappa0/10, kappa1 = 20 kappa0, g on the even mode only. The decay
// scale slides the system between strong coupling (3 reflection peaks) and
// the overdamped single-peak regime.
ValidatedParams fig3_family(double kappa_scale, double g = 10.0) {
  SystemParams p;
  p.kappa_e0 = p.kappa_o0 = 1.0 * kappa_scale;
  p.kappa_e1 = p.kappa_o1 = 20.0 * kappa_scale;
  p.gamma_p = 0.1 * kappa_scale;
  p.g_e = Complex{g, 0.0};
  return validate(p);
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_SUITE("spectra") {

  TEST_CASE("grid properties and pointwise flux closure") {
    const Spectrum s = sweep(fig3_family(1.0), SpinState::Up, -20.0, 20.0, 257);
    REQUIRE(s.delta_grid.size() == 257);
    REQUIRE(s.T.size() == 257);
    REQUIRE(s.R.size() == 257);
    REQUIRE(s.L.size() == 257);
    for (std::size_t i = 1; i < s.delta_grid.size(); ++i)
      CHECK(s.delta_grid[i] > s.delta_grid[i - 1]);
    for (std::size_t i = 0; i < s.delta_grid.size(); ++i)
      CHECK(std::abs(s.T[i] + s.R[i] + s.L[i] - 1.0) < 1e-10);
  }

  TEST_CASE("sweep argument validation") {
    CHECK_THROWS_AS(sweep(fig3_family(1.0), SpinState::Up, 0.0, 1.0, 1), ValidationError);
    CHECK_THROWS_AS(sweep(fig3_family(1.0), SpinState::Up, 1.0, -1.0, 11), ValidationError);
  }

  TEST_CASE("no dipole: zero reflection and the known transmission dip") {
    const Spectrum s = sweep(fig3_family(1.0), SpinState::Down, -20.0, 20.0, 401);
    for (double r : s.R) CHECK(r < 1e-24);
    // T(0) = ((kappa1 - kappa0)/kappa)^2
    const double t0 = s.T[200];
    CHECK(t0 == doctest::Approx(0.8185941043083901).epsilon(1e-12));
    // near-unity transmission far outside the linewidth
    const Spectrum wide = sweep(fig3_family(1.0), SpinState::Down, -200.0, 200.0, 41);
    CHECK(wide.T.front() > 0.99);
    CHECK(wide.T.back() > 0.99);
  }

  TEST_CASE("decoupled waveguide: unit transmission everywhere") {
    SystemParams p;
    p.kappa_e0 = p.kappa_o0 = 1.0;
    p.gamma_p = 0.1;
    p.g_e = Complex{10.0, 0.0};
    const Spectrum s = sweep(validate(p), SpinState::Up, -10.0, 10.0, 101);
    for (std::size_t i = 0; i < s.T.size(); ++i) {
      CHECK(std::abs(s.T[i] - 1.0) < 1e-12);
      CHECK(s.R[i] < 1e-24);
    }
  }

  TEST_CASE("spin-up operating point reproduces the reflection value") {
    const Spectrum s = sweep(fig3_family(1.0), SpinState::Up, -20.0, 20.0, 401);
    CHECK(s.R[200] == doctest::Approx(0.87010150066819114).epsilon(1e-10));
    CHECK(s.T[200] < 1e-3);
  }

  TEST_CASE("strong coupling: three reflection peaks near 0 and +-g") {
    // kappa scaled down 20x from the overdamped point: kappa = 1.05, g = 10
    const Spectrum s = sweep(fig3_family(0.05), SpinState::Up, -20.0, 20.0, 161);
    const double step = s.delta_grid[1] - s.delta_grid[0]; // 0.25
    const auto peaks = find_peaks(s);
    REQUIRE(peaks.size() == 3);
    CHECK(std::abs(peaks[0].delta + 10.0) <= step);
    CHECK(std::abs(peaks[1].delta) <= step);
    CHECK(std::abs(peaks[2].delta - 10.0) <= step);
  }

  TEST_CASE("overdamped cavity: the three peaks merge into one") {
    const Spectrum s = sweep(fig3_family(1.0), SpinState::Up, -20.0, 20.0, 161);
    const auto peaks = find_peaks(s);
    REQUIRE(peaks.size() == 1);
    CHECK(std::abs(peaks[0].delta) < 0.3);
  }

  TEST_CASE("peak count transitions monotonically 3 -> 1 over a decay ladder") {
    int prev = 3;
    for (int i = 0; i <= 40; ++i) {
      const double scale = 0.02 * std::pow(10.0 / 0.02, i / 40.0);
      const Spectrum s = sweep(fig3_family(scale), SpinState::Up, -25.0, 25.0, 501);
      const int count = static_cast<int>(find_peaks(s).size());
      CHECK((count == 1 || count == 3));
      CHECK(count <= prev);
      prev = count;
    }
    CHECK(prev == 1);
  }

  TEST_CASE("spectral symmetry for real couplings at zero emitter detuning") {
    const Spectrum s = sweep(fig3_family(0.3), SpinState::Up, -15.0, 15.0, 301);
    const int n = static_cast<int>(s.delta_grid.size());
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(s.T[i] - s.T[n - 1 - i]) < 1e-10);
      CHECK(std::abs(s.R[i] - s.R[n - 1 - i]) < 1e-10);
    }
  }

  TEST_CASE("grid refinement moves no peak by more than a coarse step") {
    const Spectrum coarse = sweep(fig3_family(0.05), SpinState::Up, -20.0, 20.0, 161);
    const Spectrum fine = sweep(fig3_family(0.05), SpinState::Up, -20.0, 20.0, 321);
    const auto pc = find_peaks(coarse);
    const auto pf = find_peaks(fine);
    REQUIRE(pc.size() == pf.size());
    const double coarse_step = coarse.delta_grid[1] - coarse.delta_grid[0];
    for (std::size_t i = 0; i < pc.size(); ++i)
      CHECK(std::abs(pc[i].delta - pf[i].delta) <= coarse_step);
  }

  TEST_CASE("monotone spectrum has no peaks; short spectra are rejected") {
    Spectrum s;
    s.delta_grid = {0.0, 1.0, 2.0, 3.0};
    s.R = {3.0, 2.0, 1.0, 0.5};
    s.T = {0.0, 0.0, 0.0, 0.0};
    s.L = s.T;
    CHECK(find_peaks(s).empty());
    Spectrum tiny;
    tiny.delta_grid = {0.0, 1.0};
    tiny.R = {0.0, 1.0};
    tiny.T = tiny.R;
    tiny.L = tiny.R;
    CHECK_THROWS_AS(find_peaks(tiny), ValidationError);
  }

  TEST_CASE("plateaus collapse to their midpoint") {
    Spectrum s;
    s.delta_grid = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    s.R = {0.0, 1.0, 1.0, 1.0, 0.0, 0.0};
    s.T.assign(6, 0.0);
    s.L.assign(6, 0.0);
    const auto peaks = find_peaks(s);
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].delta == 2.0);
  }

  TEST_CASE("prominence threshold suppresses ripple") {
    Spectrum s;
    for (int i = 0; i < 101; ++i) {
      const double x = -5.0 + 0.1 * i;
      s.delta_grid.push_back(x);
      // dominant peak plus a 0.1%-height wiggle
      s.R.push_back(std::exp(-x * x) + 1e-3 * std::cos(40.0 * x));
      s.T.push_back(0.0);
      s.L.push_back(0.0);
    }
    CHECK(find_peaks(s, 0.01).size() == 1);
    CHECK(find_peaks(s, 1e-5).size() > 1);
  }

  TEST_CASE("emit writes header plus one row per point") {
    Spectrum s;
    s.delta_grid = {-1.0, 0.0, 1.0};
    s.T = {0.25, 0.5, 0.125};
    s.R = {0.5, 0.25, 0.25};
    s.L = {0.25, 0.25, 0.625};
    std::ostringstream os;
    emit(s, os);
    const std::string text = os.str();
    CHECK(text == "delta,T,R,L\n-1,0.25,0.5,0.25\n0,0.5,0.25,0.25\n1,0.125,0.25,0.625\n");
  }

  TEST_CASE("emit is byte-identical across runs and round-trips exactly") {
    const Spectrum s = sweep(fig3_family(1.0), SpinState::Up, -17.3, 19.1, 57);
    const auto path_a = temp_file("cdc_spec_a.csv");
    const auto path_b = temp_file("cdc_spec_b.csv");
    emit(s, path_a);
    emit(s, path_b);
    std::ifstream fa(path_a, std::ios::binary), fb(path_b, std::ios::binary);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    REQUIRE(sa.str() == sb.str());
    CHECK(sa.str().starts_with("delta,T,R,L\n"));

    // full-precision round trip
    std::istringstream is(sa.str());
    std::string line;
    std::getline(is, line);
    std::size_t row = 0;
    while (std::getline(is, line)) {
      double v[4];
      REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) == 4);
      CHECK(v[0] == s.delta_grid[row]);
      CHECK(v[1] == s.T[row]);
      CHECK(v[2] == s.R[row]);
      CHECK(v[3] == s.L[row]);
      ++row;
    }
    CHECK(row == s.delta_grid.size());
    std::filesystem::remove(path_a);
    std::filesystem::remove(path_b);
  }

  TEST_CASE("emit surfaces I/O failures with the path") {
    Spectrum s;
    s.delta_grid = {0.0, 1.0, 2.0};
    s.T = {0.0, 0.0, 0.0};
    s.R = s.T;
    s.L = s.T;
    CHECK_THROWS_AS(emit(s, std::filesystem::path("/nonexistent-dir/x.csv")), IoError);
  }
}
