#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdc/model.hpp"
#include "cdc/pulse.hpp"

namespace cdc {

// Two-qubit basis order {h_up, h_down, v_up, v_down}: photon polarization
// major, spin minor. Only h-polarized photons address the cavity modes; a
// v-polarized photon bypasses them with unit amplitude.

/// Conditional scattering amplitudes of an h-polarized photon for the two
/// spin states. t_v = 1 is fixed.
struct ConditionalAmplitudes {
  Complex t_up{0.0, 0.0};
  Complex t_down{0.0, 0.0};
  Complex r_up{0.0, 0.0};
  Complex r_down{0.0, 0.0};
};

/// Monochromatic evaluation at drive frequency omega_l: spin Up with the
/// couplings on, spin Down with the dipole decoupled. Requires the gate
/// coupling convention g_o = -i g_e (throws ValidationError otherwise).
ConditionalAmplitudes conditional_amplitudes(const ValidatedParams& p, double omega_l);

/// Band-averaged variant: effective amplitudes sum |f(w)|^2 t(w) over the
/// pulse spectral density (same for r).
ConditionalAmplitudes conditional_amplitudes(const ValidatedParams& p,
                                             const PulseWaveform& pulse);

enum class FidelityDefinition { AmplitudeOverlap, ProbabilityOverlap };

/// Gate fidelity for the input (|up> + |down>)/sqrt(2) (x) |h>.
/// AmplitudeOverlap: F = |t_up - t_down| / 2 — the overlap of the
/// unnormalized output with the ideal output, penalizing photon loss and
/// backscatter. ProbabilityOverlap returns F^2.
double fidelity(const ConditionalAmplitudes& amps,
                FidelityDefinition definition = FidelityDefinition::AmplitudeOverlap);

enum class SweepVariable { Kappa1, Gamma };

struct FidelityCurve {
  SweepVariable variable = SweepVariable::Kappa1;
  std::vector<double> x;
  std::vector<double> F;
};

/// Gate fidelity of a named case over a grid of the swept variable,
/// evaluated monochromatically at the case operating point (delta = 0).
/// Kappa1 sweeps scale the external couplings keeping the case's e/o ratio;
/// Gamma sweeps set the composite dephasing gamma = x with the other case
/// parameters pinned.
FidelityCurve fidelity_sweep(CaseId id, SweepVariable variable, const std::vector<double>& grid,
                             double g_e_magnitude = 30.0);

/// Uniform grid helper, log-spaced when log_scale.
std::vector<double> sweep_grid(double min, double max, int points, bool log_scale);

/// CSV with header `x,F`.
void emit(const FidelityCurve& curve, std::ostream& os);
void emit(const FidelityCurve& curve, const std::filesystem::path& destination);

using Mat2 = std::array<std::array<Complex, 2>, 2>;
using GateMatrix = std::array<std::array<Complex, 4>, 4>;

/// 4 complex amplitudes in the basis {h_up, h_down, v_up, v_down}; norm may
/// be below 1 (photon loss).
struct TwoQubitState {
  std::array<Complex, 4> a{};
};

/// diag(t_up, t_down, 1, 1) — the conditional-phase gate on the
/// photon (x) spin pair.
GateMatrix gate_matrix(const ConditionalAmplitudes& amps);

/// diag(1, -1, 1, 1): the ideal controlled-phase operation.
GateMatrix ideal_cz();

GateMatrix identity_gate();

/// Single-qubit rotation acting on the photon (P (x) I) or spin (I (x) S).
GateMatrix photon_rotation(const Mat2& p);
GateMatrix spin_rotation(const Mat2& s);

Mat2 hadamard();

GateMatrix compose(const GateMatrix& a, const GateMatrix& b); ///< a * b

TwoQubitState apply(const GateMatrix& op, const TwoQubitState& state);

/// Pure-state concurrence C = 2 |a0 a3 - a1 a2| of the renormalized state.
/// Throws ValidationError for a zero-norm state.
double concurrence(const TwoQubitState& state);

struct TruthTableRow {
  std::string input;      ///< basis label, e.g. "h_up"
  Complex amplitude;      ///< output amplitude on the same basis state
  Complex ideal;          ///< ideal amplitude
  double deviation = 0.0; ///< |amplitude - ideal|
};

using TruthTable = std::array<TruthTableRow, 4>;

TruthTable truth_table(const ConditionalAmplitudes& amps);
TruthTable ideal_truth_table();

} // namespace cdc
