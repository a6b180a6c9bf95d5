#include "cdc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "cdc/errors.hpp"
#include "cdc/gate.hpp"
#include "cdc/model.hpp"
#include "cdc/pulse.hpp"
#include "cdc/serialize.hpp"
#include "cdc/spectra.hpp"
#include "cdc/steady_state.hpp"
#include "detail/fmt.hpp"

namespace cdc::cli {

namespace {

using nlohmann::json;
using detail::format_double;

constexpr const char* kCommandBlocks[] = {"spectrum", "fidelity_sweep", "pulse", "gate",
                                          "truth_table"};

json load_scenario(const std::string& path, const std::string& command_block) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open config: " + path);
  json j;
  try {
    j = json::parse(is);
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string("invalid JSON in ") + path + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config", "scenario must be a JSON object");
  int blocks = 0;
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key == "params") continue;
    if (std::find(std::begin(kCommandBlocks), std::end(kCommandBlocks), key) !=
        std::end(kCommandBlocks)) {
      ++blocks;
      continue;
    }
    throw ValidationError(key, "unknown scenario field");
  }
  if (blocks != 1)
    throw ValidationError("config", "scenario must contain exactly one command block");
  if (!j.contains(command_block))
    throw ValidationError("config", "scenario has no '" + command_block + "' block");
  return j;
}

double get_number(const json& block, const char* field, std::optional<double> fallback = {}) {
  if (!block.contains(field)) {
    if (fallback) return *fallback;
    throw ValidationError(field, "missing required field");
  }
  if (!block.at(field).is_number()) throw ValidationError(field, "expected a number");
  return block.at(field).get<double>();
}

int get_int(const json& block, const char* field, std::optional<int> fallback = {}) {
  if (!block.contains(field)) {
    if (fallback) return *fallback;
    throw ValidationError(field, "missing required field");
  }
  if (!block.at(field).is_number_integer()) throw ValidationError(field, "expected an integer");
  return block.at(field).get<int>();
}

std::string get_string(const json& block, const char* field,
                       std::optional<std::string> fallback = {}) {
  if (!block.contains(field)) {
    if (fallback) return *fallback;
    throw ValidationError(field, "missing required field");
  }
  if (!block.at(field).is_string()) throw ValidationError(field, "expected a string");
  return block.at(field).get<std::string>();
}

bool get_bool(const json& block, const char* field, bool fallback) {
  if (!block.contains(field)) return fallback;
  if (!block.at(field).is_boolean()) throw ValidationError(field, "expected a boolean");
  return block.at(field).get<bool>();
}

SpinState spin_from_string(const std::string& s) {
  if (s == "up") return SpinState::Up;
  if (s == "down") return SpinState::Down;
  throw ValidationError("spin", "expected 'up' or 'down'");
}

// resolution order: explicit flag, then the scenario, then the default
template <typename T>
T resolve(const std::optional<T>& flag, std::optional<T> from_config, T fallback) {
  if (flag) return *flag;
  if (from_config) return *from_config;
  return fallback;
}

ResolvedParams params_from(const json& scenario, const std::optional<std::string>& case_flag,
                           double g_flag) {
  if (case_flag) {
    const CasePreset preset = case_params(case_from_string(*case_flag), g_flag);
    return ResolvedParams{preset.params, preset.omega_l};
  }
  if (scenario.contains("params")) return resolve_params(scenario.at("params"));
  throw ValidationError("params", "no parameters given (use --case or a config with 'params')");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  os << text;
  os.flush();
  if (!os) throw IoError("write failure: " + path);
}

struct CommonFlags {
  std::optional<std::string> config;
  std::optional<std::string> case_id;
  std::optional<std::string> out;
  double g = 30.0;
};

struct SpectrumFlags : CommonFlags {
  std::optional<std::string> spin;
  std::optional<double> delta_min, delta_max;
  std::optional<int> points;
};

int run_spectrum(const SpectrumFlags& f) {
  json scenario = json::object();
  json block = json::object();
  if (f.config) {
    scenario = load_scenario(*f.config, "spectrum");
    block = scenario.at("spectrum");
  }
  const ResolvedParams rp = params_from(scenario, f.case_id, f.g);
  const SpinState spin =
      spin_from_string(resolve(f.spin, block.contains("spin")
                                           ? std::optional<std::string>(get_string(block, "spin"))
                                           : std::nullopt,
                               std::string("up")));
  double dmin, dmax;
  if (f.delta_min || f.delta_max) {
    if (!f.delta_min || !f.delta_max)
      throw ValidationError("delta_min", "give both --delta-min and --delta-max");
    dmin = *f.delta_min;
    dmax = *f.delta_max;
  } else if (block.contains("delta_min") || block.contains("delta_max")) {
    dmin = get_number(block, "delta_min");
    dmax = get_number(block, "delta_max");
  } else {
    const double scale = std::max(
        {std::abs(rp.params.g_e()), rp.params.kappa_e(), rp.params.kappa_o(), 1.0});
    dmin = -2.0 * scale;
    dmax = 2.0 * scale;
  }
  const int points = resolve(f.points,
                             block.contains("points") ? std::optional<int>(get_int(block, "points"))
                                                      : std::nullopt,
                             1001);
  const std::string out = resolve(
      f.out,
      block.contains("out") ? std::optional<std::string>(get_string(block, "out")) : std::nullopt,
      std::string("spectrum.csv"));

  const Spectrum spec = sweep(rp.params, spin, dmin, dmax, points);
  emit(spec, std::filesystem::path(out));
  const auto r_it = std::max_element(spec.R.begin(), spec.R.end());
  const auto t_it = std::min_element(spec.T.begin(), spec.T.end());
  const std::size_t r_idx = static_cast<std::size_t>(r_it - spec.R.begin());
  const std::size_t t_idx = static_cast<std::size_t>(t_it - spec.T.begin());
  std::cout << "spectrum: points=" << points << " spin=" << (spin == SpinState::Up ? "up" : "down")
            << " max_R=" << format_double(spec.R[r_idx])
            << " at delta=" << format_double(spec.delta_grid[r_idx])
            << ", min_T=" << format_double(spec.T[t_idx])
            << " at delta=" << format_double(spec.delta_grid[t_idx]) << " -> " << out << "\n";
  return 0;
}

struct SweepFlags : CommonFlags {
  std::optional<std::string> variable;
  std::optional<double> min, max;
  std::optional<int> points;
  bool linear = false;
};

int run_fidelity_sweep(const SweepFlags& f) {
  json block = json::object();
  if (f.config) block = load_scenario(*f.config, "fidelity_sweep").at("fidelity_sweep");
  const std::string case_id = resolve(
      f.case_id,
      block.contains("case") ? std::optional<std::string>(get_string(block, "case"))
                             : std::nullopt,
      std::string("I"));
  const std::string variable = resolve(
      f.variable,
      block.contains("variable") ? std::optional<std::string>(get_string(block, "variable"))
                                 : std::nullopt,
      std::string("kappa1"));
  SweepVariable var;
  if (variable == "kappa1") var = SweepVariable::Kappa1;
  else if (variable == "gamma") var = SweepVariable::Gamma;
  else throw ValidationError("variable", "expected 'kappa1' or 'gamma'");
  const double g = block.contains("g") && f.g == 30.0 ? get_number(block, "g") : f.g;
  const double def_min = var == SweepVariable::Kappa1 ? 3.0 : 0.01;
  const double def_max = var == SweepVariable::Kappa1 ? 300.0 : 10.0;
  const double min = resolve(
      f.min,
      block.contains("min") ? std::optional<double>(get_number(block, "min")) : std::nullopt,
      def_min);
  const double max = resolve(
      f.max,
      block.contains("max") ? std::optional<double>(get_number(block, "max")) : std::nullopt,
      def_max);
  const int points = resolve(
      f.points,
      block.contains("points") ? std::optional<int>(get_int(block, "points")) : std::nullopt, 61);
  const bool log_scale = f.linear ? false : get_bool(block, "log", true);
  const std::string out = resolve(
      f.out,
      block.contains("out") ? std::optional<std::string>(get_string(block, "out")) : std::nullopt,
      std::string("fidelity_sweep.csv"));

  const FidelityCurve curve =
      fidelity_sweep(case_from_string(case_id), var, sweep_grid(min, max, points, log_scale), g);
  emit(curve, std::filesystem::path(out));
  const auto it = std::max_element(curve.F.begin(), curve.F.end());
  const std::size_t idx = static_cast<std::size_t>(it - curve.F.begin());
  std::cout << "fidelity-sweep: case=" << case_id << " variable=" << variable
            << " points=" << points << " max_F=" << format_double(curve.F[idx]) << " at "
            << variable << "=" << format_double(curve.x[idx]) << " -> " << out << "\n";
  return 0;
}

struct PulseFlags : CommonFlags {};

int run_pulse(const PulseFlags& f) {
  if (!f.config) throw ValidationError("config", "pulse requires --config");
  const json scenario = load_scenario(*f.config, "pulse");
  const json& block = scenario.at("pulse");
  const ResolvedParams rp = params_from(scenario, f.case_id, f.g);
  const double tau = get_number(block, "tau");
  const double half_span = get_number(block, "half_span", 8.0 * tau);
  const int samples = get_int(block, "samples", 1024);
  const SpinState spin = spin_from_string(get_string(block, "spin", std::string("up")));
  const std::string method = get_string(block, "method", std::string("both"));
  if (method != "frequency" && method != "time" && method != "both")
    throw ValidationError("method", "expected 'frequency', 'time' or 'both'");
  const double omega_l = get_number(block, "omega_l", rp.omega_l);
  const std::string out =
      resolve(f.out,
              block.contains("out") ? std::optional<std::string>(get_string(block, "out"))
                                    : std::nullopt,
              std::string("pulse.csv"));

  const PulseWaveform pulse = gaussian_pulse(tau, omega_l, half_span, samples);
  std::optional<OutputFields> freq, time;
  if (method == "frequency" || method == "both")
    freq = propagate_frequency(rp.params, spin, pulse);
  if (method == "time" || method == "both") {
    const DetuningSet det = detunings(rp.params, omega_l);
    const double max_rate = std::max(
        {rp.params.kappa_e(), rp.params.kappa_o(), rp.params.gamma(), std::abs(rp.params.g_e()),
         std::abs(rp.params.g_o()), std::abs(det.delta_el), std::abs(det.delta_ol),
         std::abs(det.delta_al), 1e-3});
    const double dt = get_number(block, "dt", std::min(pulse.dt(), 0.05 / max_rate));
    time = propagate_time(rp.params, spin, pulse, dt);
  }

  const OutputFields& primary = freq ? *freq : *time;
  emit(primary, std::filesystem::path(out));
  std::cout << "pulse: method=" << method << " norm_t=" << format_double(primary.norm_t)
            << " norm_r=" << format_double(primary.norm_r);
  if (freq && time) {
    double num = 0.0;
    for (std::size_t i = 0; i < freq->transmitted.size(); ++i) {
      num += std::norm(freq->transmitted[i] - time->transmitted[i]);
      num += std::norm(freq->reflected[i] - time->reflected[i]);
    }
    std::cout << " method_diff_l2=" << format_double(std::sqrt(num * pulse.dt()));
  }
  std::cout << " -> " << out << "\n";
  return 0;
}

struct GateFlags : CommonFlags {};

int run_gate(const GateFlags& f) {
  json scenario = json::object();
  json block = json::object();
  if (f.config) {
    scenario = load_scenario(*f.config, "gate");
    block = scenario.at("gate");
  }
  const ResolvedParams rp = params_from(scenario, f.case_id, f.g);
  const double omega_l = get_number(block, "omega_l", rp.omega_l);
  const std::string out =
      resolve(f.out,
              block.contains("out") ? std::optional<std::string>(get_string(block, "out"))
                                    : std::nullopt,
              std::string("gate.json"));
  const ConditionalAmplitudes amps = conditional_amplitudes(rp.params, omega_l);
  json doc = to_json(gate_matrix(amps));
  doc.update(to_json(amps));
  doc["fidelity"] = fidelity(amps);
  doc["fidelity_probability"] = fidelity(amps, FidelityDefinition::ProbabilityOverlap);
  write_text(out, doc.dump(2) + "\n");
  std::cout << "gate: F=" << format_double(fidelity(amps)) << " -> " << out << "\n";
  return 0;
}

struct TruthTableFlags : CommonFlags {
  bool ideal = false;
};

int run_truth_table(const TruthTableFlags& f) {
  json scenario = json::object();
  json block = json::object();
  if (f.config) {
    scenario = load_scenario(*f.config, "truth_table");
    block = scenario.at("truth_table");
  }
  const bool ideal = f.ideal || get_bool(block, "ideal", false);
  const std::string out =
      resolve(f.out,
              block.contains("out") ? std::optional<std::string>(get_string(block, "out"))
                                    : std::nullopt,
              std::string("truth_table.json"));
  TruthTable table;
  if (ideal) {
    table = ideal_truth_table();
  } else {
    const ResolvedParams rp = params_from(scenario, f.case_id, f.g);
    const double omega_l = get_number(block, "omega_l", rp.omega_l);
    table = truth_table(conditional_amplitudes(rp.params, omega_l));
  }
  json doc = to_json(table);
  doc["ideal"] = ideal;
  write_text(out, doc.dump(2) + "\n");
  double max_dev = 0.0;
  for (const auto& row : table) max_dev = std::max(max_dev, row.deviation);
  std::cout << "truth-table: max_deviation=" << format_double(max_dev) << " -> " << out << "\n";
  return 0;
}

int run_case_list(double g) {
  for (const CaseId id :
       {CaseId::I, CaseId::II, CaseId::III, CaseId::IV, CaseId::V, CaseId::VI, CaseId::VII}) {
    const CasePreset preset = case_params(id, g);
    const auto& p = preset.params;
    std::cout << "case " << to_string(id) << ": kappa_e0=" << format_double(p.kappa_e0())
              << " kappa_o0=" << format_double(p.kappa_o0())
              << " kappa_e1=" << format_double(p.kappa_e1())
              << " kappa_o1=" << format_double(p.kappa_o1())
              << " delta_el=" << format_double(p.omega_e())
              << " delta_ol=" << format_double(p.omega_o())
              << " delta_al=" << format_double(p.omega_a())
              << " gamma=" << format_double(p.gamma()) << " g=" << format_double(std::abs(p.g_e()))
              << "\n";
  }
  return 0;
}

void bind_common(CLI::App* sc, CommonFlags& f, std::string& config, std::string& case_id,
                 std::string& out) {
  sc->add_option("--config", config, "scenario JSON");
  sc->add_option("--case", case_id, "case preset I..VII");
  sc->add_option("--g", f.g, "coupling magnitude for --case");
  sc->add_option("--out", out, "output path");
}

void fill_common(const CLI::App* sc, CommonFlags& f, const std::string& config,
                 const std::string& case_id, const std::string& out) {
  if (sc->count("--config")) f.config = config;
  if (sc->count("--case")) f.case_id = case_id;
  if (sc->count("--out")) f.out = out;
}

} // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"cavity-dipole-cavity simulator: steady-state scattering, spectra, pulses and "
               "the spin-photon phase gate"};
  app.require_subcommand(1);

  SpectrumFlags spectrum_flags;
  std::string sp_config, sp_case, sp_out, sp_spin;
  double sp_dmin = 0.0, sp_dmax = 0.0;
  int sp_points = 0;
  auto* sc_spectrum = app.add_subcommand("spectrum", "transmission/reflection/loss vs detuning");
  bind_common(sc_spectrum, spectrum_flags, sp_config, sp_case, sp_out);
  sc_spectrum->add_option("--spin", sp_spin, "up|down");
  sc_spectrum->add_option("--delta-min", sp_dmin, "grid start");
  sc_spectrum->add_option("--delta-max", sp_dmax, "grid end");
  sc_spectrum->add_option("--points", sp_points, "grid points");

  SweepFlags sweep_flags;
  std::string sw_config, sw_case, sw_out, sw_variable;
  double sw_min = 0.0, sw_max = 0.0;
  int sw_points = 0;
  auto* sc_sweep = app.add_subcommand("fidelity-sweep", "gate fidelity vs kappa1 or gamma");
  bind_common(sc_sweep, sweep_flags, sw_config, sw_case, sw_out);
  sc_sweep->add_option("--variable", sw_variable, "kappa1|gamma");
  sc_sweep->add_option("--min", sw_min, "sweep start");
  sc_sweep->add_option("--max", sw_max, "sweep end");
  sc_sweep->add_option("--points", sw_points, "grid points");
  sc_sweep->add_flag("--linear", sweep_flags.linear, "linear grid (default log)");

  PulseFlags pulse_flags;
  std::string pu_config, pu_case, pu_out;
  auto* sc_pulse = app.add_subcommand("pulse", "propagate a Gaussian pulse through the system");
  bind_common(sc_pulse, pulse_flags, pu_config, pu_case, pu_out);

  GateFlags gate_flags;
  std::string ga_config, ga_case, ga_out;
  auto* sc_gate = app.add_subcommand("gate", "conditional amplitudes, gate matrix and fidelity");
  bind_common(sc_gate, gate_flags, ga_config, ga_case, ga_out);

  TruthTableFlags tt_flags;
  std::string tt_config, tt_case, tt_out;
  auto* sc_tt = app.add_subcommand("truth-table", "gate truth table");
  bind_common(sc_tt, tt_flags, tt_config, tt_case, tt_out);
  sc_tt->add_flag("--ideal", tt_flags.ideal, "ideal gate instead of computed amplitudes");

  double case_list_g = 30.0;
  auto* sc_cases = app.add_subcommand("case-list", "print the named case presets");
  sc_cases->add_option("--g", case_list_g, "coupling magnitude");

  std::uint64_t seed = 20260809ULL;
  bool corrupt = false;
  auto* sc_selftest = app.add_subcommand("selftest", "run the built-in physics checks");
  sc_selftest->add_option("--seed", seed, "draw seed (recorded in the report)");
  sc_selftest->add_flag("--corrupt-sign-convention", corrupt,
                        "negative control: flip the odd-mode output sign");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sc_spectrum->parsed()) {
      fill_common(sc_spectrum, spectrum_flags, sp_config, sp_case, sp_out);
      if (sc_spectrum->count("--spin")) spectrum_flags.spin = sp_spin;
      if (sc_spectrum->count("--delta-min")) spectrum_flags.delta_min = sp_dmin;
      if (sc_spectrum->count("--delta-max")) spectrum_flags.delta_max = sp_dmax;
      if (sc_spectrum->count("--points")) spectrum_flags.points = sp_points;
      return run_spectrum(spectrum_flags);
    }
    if (sc_sweep->parsed()) {
      fill_common(sc_sweep, sweep_flags, sw_config, sw_case, sw_out);
      if (sc_sweep->count("--variable")) sweep_flags.variable = sw_variable;
      if (sc_sweep->count("--min")) sweep_flags.min = sw_min;
      if (sc_sweep->count("--max")) sweep_flags.max = sw_max;
      if (sc_sweep->count("--points")) sweep_flags.points = sw_points;
      return run_fidelity_sweep(sweep_flags);
    }
    if (sc_pulse->parsed()) {
      fill_common(sc_pulse, pulse_flags, pu_config, pu_case, pu_out);
      return run_pulse(pulse_flags);
    }
    if (sc_gate->parsed()) {
      fill_common(sc_gate, gate_flags, ga_config, ga_case, ga_out);
      return run_gate(gate_flags);
    }
    if (sc_tt->parsed()) {
      fill_common(sc_tt, tt_flags, tt_config, tt_case, tt_out);
      return run_truth_table(tt_flags);
    }
    if (sc_cases->parsed()) return run_case_list(case_list_g);
    if (sc_selftest->parsed()) {
      const SelfTestReport report = selftest(seed, corrupt);
      std::cout << report.text;
      return report.pass ? 0 : 1;
    }
  } catch (const SingularSystemError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StepSizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("cdcsim");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace cdc::cli
