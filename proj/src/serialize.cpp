#include "cdc/serialize.hpp"

#include "cdc/errors.hpp"

namespace cdc {

using nlohmann::json;

namespace {

json complex_to_json(Complex v) { return json::array({v.real(), v.imag()}); }

Complex complex_from_json(const json& j, const char* field) {
  if (j.is_number()) return Complex{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex{j[0].get<double>(), j[1].get<double>()};
  throw ValidationError(field, "expected a number or [re, im]");
}

double number_from_json(const json& j, const char* field) {
  if (!j.is_number()) throw ValidationError(field, "expected a number");
  return j.get<double>();
}

} // namespace

json to_json(const SystemParams& p) {
  return json{{"omega_e", p.omega_e},   {"omega_o", p.omega_o},   {"omega_a", p.omega_a},
              {"kappa_e0", p.kappa_e0}, {"kappa_o0", p.kappa_o0}, {"kappa_e1", p.kappa_e1},
              {"kappa_o1", p.kappa_o1}, {"g_e", complex_to_json(p.g_e)},
              {"g_o", complex_to_json(p.g_o)}, {"gamma_s", p.gamma_s}, {"gamma_p", p.gamma_p}};
}

SystemParams system_params_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("params", "expected an object");
  SystemParams p;
  for (const auto& [key, value] : j.items()) {
    if (key == "omega_e") p.omega_e = number_from_json(value, "omega_e");
    else if (key == "omega_o") p.omega_o = number_from_json(value, "omega_o");
    else if (key == "omega_a") p.omega_a = number_from_json(value, "omega_a");
    else if (key == "kappa_e0") p.kappa_e0 = number_from_json(value, "kappa_e0");
    else if (key == "kappa_o0") p.kappa_o0 = number_from_json(value, "kappa_o0");
    else if (key == "kappa_e1") p.kappa_e1 = number_from_json(value, "kappa_e1");
    else if (key == "kappa_o1") p.kappa_o1 = number_from_json(value, "kappa_o1");
    else if (key == "g_e") p.g_e = complex_from_json(value, "g_e");
    else if (key == "g_o") p.g_o = complex_from_json(value, "g_o");
    else if (key == "gamma_s") p.gamma_s = number_from_json(value, "gamma_s");
    else if (key == "gamma_p") p.gamma_p = number_from_json(value, "gamma_p");
    else throw ValidationError(key, "unknown parameter field");
  }
  return p;
}

ResolvedParams resolve_params(const json& j) {
  if (!j.is_object()) throw ValidationError("params", "expected an object");
  if (j.contains("case")) {
    if (!j.at("case").is_string()) throw ValidationError("case", "expected a string I..VII");
    const CaseId id = case_from_string(j.at("case").get<std::string>());
    double g = 30.0;
    for (const auto& [key, value] : j.items()) {
      if (key == "case") continue;
      if (key == "g") g = number_from_json(value, "g");
      else throw ValidationError(key, "unknown field in case params");
    }
    const CasePreset preset = case_params(id, g);
    return ResolvedParams{preset.params, preset.omega_l};
  }
  return ResolvedParams{validate(system_params_from_json(j)), 0.0};
}

json to_json(const GateMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(complex_to_json(v));
    rows.push_back(r);
  }
  return json{{"basis", {"h_up", "h_down", "v_up", "v_down"}}, {"matrix", rows}};
}

json to_json(const TruthTable& table) {
  json rows = json::array();
  for (const auto& row : table) {
    rows.push_back(json{{"input", row.input},
                        {"amplitude", complex_to_json(row.amplitude)},
                        {"ideal", complex_to_json(row.ideal)},
                        {"deviation", row.deviation}});
  }
  return json{{"basis", {"h_up", "h_down", "v_up", "v_down"}}, {"rows", rows}};
}

json to_json(const ConditionalAmplitudes& amps) {
  return json{{"t_up", complex_to_json(amps.t_up)},
              {"t_down", complex_to_json(amps.t_down)},
              {"r_up", complex_to_json(amps.r_up)},
              {"r_down", complex_to_json(amps.r_down)},
              {"t_v", complex_to_json(Complex{1.0, 0.0})}};
}

} // namespace cdc
