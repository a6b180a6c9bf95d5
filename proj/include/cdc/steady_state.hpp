#pragma once

#include "cdc/model.hpp"

namespace cdc {

// Driven steady state of the three coupled amplitudes (c_e, c_o, sigma) for
// a unit monochromatic input at port 1 and nothing at port 2, in the rotating
// frame at the drive frequency. The linear system is
//
//   (i*delta_el + kappa_e) c_e + i g_e  sigma = i sqrt(kappa_e1)
//   (i*delta_ol + kappa_o) c_o + i g_o  sigma =   sqrt(kappa_o1)
//   (i*delta_al + gamma) sigma + i (g_e* c_e + g_o* c_o) = 0
//
// with the port outputs
//
//   t = 1 + i sqrt(kappa_e1) c_e - sqrt(kappa_o1) c_o
//   r =     i sqrt(kappa_e1) c_e + sqrt(kappa_o1) c_o
//
// The even mode feeds both ports with equal phase; the odd mode with opposite
// signs. This convention reproduces the closed-form transmission
// (kappa - 2 kappa_1 - i delta + lambda)/(kappa - i delta + lambda) for the
// degenerate symmetric cavity with g_o = -i g_e, and makes the reflection
// vanish identically there.
struct SteadyState {
  Complex c_e{0.0, 0.0};
  Complex c_o{0.0, 0.0};
  Complex sigma{0.0, 0.0}; ///< emitter coherence, exactly 0 for SpinState::Down
  Complex t{0.0, 0.0};     ///< forward transmission amplitude
  Complex r{0.0, 0.0};     ///< backward reflection amplitude
  double loss_cavity_e = 0.0; ///< dissipated flux fraction 2 kappa_e0 |c_e|^2
  double loss_cavity_o = 0.0; ///< dissipated flux fraction 2 kappa_o0 |c_o|^2
  double loss_emitter = 0.0;  ///< dissipated flux fraction 2 gamma |sigma|^2
};

/// Solves the steady state at drive frequency omega_l. Throws
/// SingularSystemError when the system matrix is exactly singular (possible
/// only at zero total damping).
SteadyState solve_general(const ValidatedParams& p, double omega_l, SpinState spin);

/// Same system assembled as a dense 3x3 and solved by Gaussian elimination
/// with partial pivoting; shares no algebra with solve_general. Test oracle.
SteadyState oracle_solve(const ValidatedParams& p, double omega_l, SpinState spin);

struct ClosedFormResult {
  Complex t{0.0, 0.0};
  /// Set when i(Delta - delta) + gamma = 0 with g != 0 and the analytic
  /// limit t -> 1 was taken.
  bool dipole_dominated_limit = false;
};

/// Transmission of the degenerate symmetric cavity (kappa_e = kappa_o,
/// equal mode frequencies, g_o = -i g_e so the dipole rides the driven
/// supermode):
///   t = (kappa - 2 kappa1 - i delta + lambda) / (kappa - i delta + lambda),
///   lambda = 2 |g_e|^2 / (i (Delta - delta) + gamma).
/// The companion reflection is identically zero. SpinState::Down sets
/// lambda = 0.
ClosedFormResult transmission_closed_form(double kappa0, double kappa1, double g_e_mag,
                                          double gamma, double delta, double Delta,
                                          SpinState spin);

enum class Supermode { Plus, Minus };

/// Amplitudes and couplings in the supermode basis |+-> = (|e> +- i|o>)/sqrt(2):
/// c_+- = (c_e -+ i c_o)/sqrt(2), g_+- = (g_e -+ i g_o)/sqrt(2).
struct SupermodeView {
  Complex c_plus{0.0, 0.0};
  Complex c_minus{0.0, 0.0};
  Complex g_plus{0.0, 0.0};
  Complex g_minus{0.0, 0.0};
  /// Which supermode a port-1 drive populates under the implemented port
  /// convention (always Minus; the dipole joins it when g_o = -i g_e).
  Supermode driven_by_port_one = Supermode::Minus;
};

SupermodeView supermode_transform(const ValidatedParams& p, const SteadyState& state);

struct FluxReport {
  double transmitted = 0.0; ///< |t|^2
  double reflected = 0.0;   ///< |r|^2
  double loss_cavity_e = 0.0;
  double loss_cavity_o = 0.0;
  double loss_emitter = 0.0;
  double residual = 0.0; ///< 1 - transmitted - reflected - losses
};

/// Flux ledger of a steady state per unit input flux.
FluxReport flux_balance(const SteadyState& state);

} // namespace cdc
