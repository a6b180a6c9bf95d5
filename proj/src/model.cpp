#include "cdc/model.hpp"

#include <cmath>
#include <numbers>

#include "cdc/errors.hpp"

namespace cdc {

namespace {

void require_finite(const char* field, double v) {
  if (!std::isfinite(v)) throw ValidationError(field, "must be finite");
}

void require_rate(const char* field, double v) {
  require_finite(field, v);
  if (v < 0.0) throw ValidationError(field, "rate must be >= 0");
}

void require_finite(const char* field, Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw ValidationError(field, "must be finite");
}

} // namespace

ValidatedParams validate(const SystemParams& p) {
  require_finite("omega_e", p.omega_e);
  require_finite("omega_o", p.omega_o);
  require_finite("omega_a", p.omega_a);
  require_rate("kappa_e0", p.kappa_e0);
  require_rate("kappa_o0", p.kappa_o0);
  require_rate("kappa_e1", p.kappa_e1);
  require_rate("kappa_o1", p.kappa_o1);
  require_finite("g_e", p.g_e);
  require_finite("g_o", p.g_o);
  require_rate("gamma_s", p.gamma_s);
  require_rate("gamma_p", p.gamma_p);
  return ValidatedParams(p);
}

DetuningSet detunings(const ValidatedParams& p, double omega_l) {
  if (!std::isfinite(omega_l)) throw ValidationError("omega_l", "must be finite");
  DetuningSet d;
  d.delta_el = p.omega_e() - omega_l;
  d.delta_ol = p.omega_o() - omega_l;
  d.delta_al = p.omega_a() - omega_l;
  d.degenerate = (p.omega_e() == p.omega_o());
  const double omega_c = 0.5 * (p.omega_e() + p.omega_o());
  d.delta = omega_l - omega_c;
  d.Delta = p.omega_a() - omega_c;
  return d;
}

double q_to_kappa(double q, double wavelength_m) {
  if (!(q > 0.0)) throw ValidationError("Q", "must be > 0");
  if (!(wavelength_m > 0.0)) throw ValidationError("wavelength", "must be > 0");
  constexpr double c_m_per_ns = 0.299792458; // speed of light, m/ns
  const double omega = 2.0 * std::numbers::pi * c_m_per_ns / wavelength_m; // rad/ns
  return omega / (2.0 * q);
}

CaseId case_from_string(std::string_view name) {
  if (name == "I") return CaseId::I;
  if (name == "II") return CaseId::II;
  if (name == "III") return CaseId::III;
  if (name == "IV") return CaseId::IV;
  if (name == "V") return CaseId::V;
  if (name == "VI") return CaseId::VI;
  if (name == "VII") return CaseId::VII;
  throw ValidationError("case", "unknown case id '" + std::string(name) + "' (expected I..VII)");
}

std::string to_string(CaseId id) {
  switch (id) {
  case CaseId::I: return "I";
  case CaseId::II: return "II";
  case CaseId::III: return "III";
  case CaseId::IV: return "IV";
  case CaseId::V: return "V";
  case CaseId::VI: return "VI";
  case CaseId::VII: return "VII";
  }
  throw ValidationError("case", "unknown case id");
}

CasePreset case_params(CaseId id, double g) {
  if (!(g > 0.0)) throw ValidationError("g_e_magnitude", "must be > 0");
  SystemParams p;
  p.gamma_s = 0.002;
  p.gamma_p = 1.0;
  p.g_e = Complex{g, 0.0};
  p.g_o = Complex{0.0, -g}; // gate convention g_o = -i g_e
  switch (id) {
  case CaseId::I:
    p.kappa_e0 = p.kappa_o0 = 0.1;
    p.kappa_e1 = p.kappa_o1 = g;
    break;
  case CaseId::II:
    p.kappa_e0 = p.kappa_o0 = 1.0;
    p.kappa_e1 = p.kappa_o1 = g;
    break;
  case CaseId::III:
    p.kappa_e0 = p.kappa_o0 = 1.0;
    p.kappa_e1 = p.kappa_o1 = g;
    p.omega_a = 5.0; // delta_al = 5 kappa_0
    break;
  case CaseId::IV:
    p.kappa_e0 = p.kappa_o0 = 0.1;
    p.kappa_e1 = p.kappa_o1 = g;
    p.omega_e = 5.0;
    p.omega_o = -5.0;
    break;
  case CaseId::V:
    p.kappa_e0 = p.kappa_o0 = 1.0;
    p.kappa_e1 = p.kappa_o1 = g;
    break;
  case CaseId::VI:
    p.kappa_e0 = p.kappa_o0 = 1.0;
    p.kappa_e1 = p.kappa_o1 = g;
    p.omega_a = 5.0;
    break;
  case CaseId::VII:
    p.kappa_e0 = 0.2;
    p.kappa_o0 = 0.1;
    p.kappa_e1 = g;
    p.kappa_o1 = g / 1.1;
    p.omega_e = 5.0;
    p.omega_o = -5.0;
    p.omega_a = 1.0;
    break;
  }
  return CasePreset{validate(p), 0.0};
}

} // namespace cdc
