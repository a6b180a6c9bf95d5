#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace cdc {

using Complex = std::complex<double>;

// All rates, couplings and frequency offsets are amplitude quantities in
// rad/ns. Mode/emitter frequencies are stored as offsets from an arbitrary
// reference zero so one parameter set serves a whole drive-frequency sweep;
// only ratios of rates enter any dimensionless output.
struct SystemParams {
  double omega_e = 0.0; ///< even-mode frequency offset
  double omega_o = 0.0; ///< odd-mode frequency offset
  double omega_a = 0.0; ///< emitter transition frequency offset

  double kappa_e0 = 0.0; ///< even-mode intrinsic amplitude decay
  double kappa_o0 = 0.0; ///< odd-mode intrinsic amplitude decay
  double kappa_e1 = 0.0; ///< even-mode external (waveguide) decay
  double kappa_o1 = 0.0; ///< odd-mode external (waveguide) decay

  Complex g_e{0.0, 0.0}; ///< dipole coupling to the even mode
  Complex g_o{0.0, 0.0}; ///< dipole coupling to the odd mode

  double gamma_s = 0.0; ///< spontaneous emission rate
  double gamma_p = 0.0; ///< pure dephasing rate
};

/// SystemParams plus the derived totals kappa_e = kappa_e0 + kappa_e1,
/// kappa_o = kappa_o0 + kappa_o1 and gamma = gamma_s/2 + gamma_p.
/// Immutable after construction; only obtainable through validate().
class ValidatedParams {
public:
  const SystemParams& raw() const noexcept { return p_; }

  double kappa_e() const noexcept { return kappa_e_; }
  double kappa_o() const noexcept { return kappa_o_; }
  double gamma() const noexcept { return gamma_; }

  double omega_e() const noexcept { return p_.omega_e; }
  double omega_o() const noexcept { return p_.omega_o; }
  double omega_a() const noexcept { return p_.omega_a; }
  double kappa_e0() const noexcept { return p_.kappa_e0; }
  double kappa_o0() const noexcept { return p_.kappa_o0; }
  double kappa_e1() const noexcept { return p_.kappa_e1; }
  double kappa_o1() const noexcept { return p_.kappa_o1; }
  Complex g_e() const noexcept { return p_.g_e; }
  Complex g_o() const noexcept { return p_.g_o; }
  double gamma_s() const noexcept { return p_.gamma_s; }
  double gamma_p() const noexcept { return p_.gamma_p; }

private:
  friend ValidatedParams validate(const SystemParams& p);
  explicit ValidatedParams(const SystemParams& p)
      : p_(p), kappa_e_(p.kappa_e0 + p.kappa_e1), kappa_o_(p.kappa_o0 + p.kappa_o1),
        gamma_(p.gamma_s / 2.0 + p.gamma_p) {}

  SystemParams p_;
  double kappa_e_;
  double kappa_o_;
  double gamma_;
};

/// Rejects negative rates and non-finite values; throws ValidationError
/// naming the offending field.
ValidatedParams validate(const SystemParams& p);

/// Up: the emitter occupies the coupled spin state. Down: the dipole is
/// exactly decoupled (effective g_e = g_o = 0) in every computation.
enum class SpinState { Up, Down };

/// All detunings for one drive frequency omega_l, in the rotating frame at
/// omega_l. delta and Delta follow the degenerate-case identities
/// delta = -delta_cl, Delta = delta_al - delta_cl; for omega_e != omega_o
/// they are reported relative to the mean mode frequency and `degenerate`
/// is false.
struct DetuningSet {
  double delta_el = 0.0; ///< omega_e - omega_l
  double delta_ol = 0.0; ///< omega_o - omega_l
  double delta_al = 0.0; ///< omega_a - omega_l
  double delta = 0.0;    ///< input-cavity detuning, omega_l - omega_c
  double Delta = 0.0;    ///< emitter-cavity detuning, omega_a - omega_c
  bool degenerate = true;
};

DetuningSet detunings(const ValidatedParams& p, double omega_l);

/// Amplitude decay rate of a resonator with quality factor Q at the given
/// vacuum wavelength (metres): kappa = omega/(2Q), omega = 2*pi*c/lambda,
/// returned in rad/ns.
double q_to_kappa(double q, double wavelength_m);

enum class CaseId { I, II, III, IV, V, VI, VII };

CaseId case_from_string(std::string_view name);
std::string to_string(CaseId id);

/// A named parameter set together with its operating drive frequency
/// (the gate runs the laser on the mean cavity resonance, delta = 0).
struct CasePreset {
  ValidatedParams params;
  double omega_l = 0.0;
};

/// The seven named gate operating points. Frequencies are stored relative
/// to the laser (omega_l = 0). gamma_s = 0.002, gamma_p = 1.0 throughout;
/// couplings use the gate convention g_o = -i*g_e with |g_e| = g_e_magnitude.
/// Cases I-IV leave the external coupling free (swept in use); here it
/// defaults to the g_e-matched operating point kappa_e1 = kappa_o1 = |g_e|.
/// Cases V-VII pin the external coupling as part of the case definition.
CasePreset case_params(CaseId id, double g_e_magnitude = 30.0);

} // namespace cdc
