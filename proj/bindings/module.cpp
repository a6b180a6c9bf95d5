#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdc/gate.hpp"
#include "cdc/model.hpp"
#include "cdc/pulse.hpp"
#include "cdc/spectra.hpp"
#include "cdc/steady_state.hpp"

namespace py = pybind11;
using namespace cdc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "cavity-dipole-cavity QED simulator core";

  py::enum_<SpinState>(m, "SpinState")
      .value("Up", SpinState::Up)
      .value("Down", SpinState::Down);

  py::class_<SystemParams>(m, "SystemParams")
      .def(py::init<>())
      .def_readwrite("omega_e", &SystemParams::omega_e)
      .def_readwrite("omega_o", &SystemParams::omega_o)
      .def_readwrite("omega_a", &SystemParams::omega_a)
      .def_readwrite("kappa_e0", &SystemParams::kappa_e0)
      .def_readwrite("kappa_o0", &SystemParams::kappa_o0)
      .def_readwrite("kappa_e1", &SystemParams::kappa_e1)
      .def_readwrite("kappa_o1", &SystemParams::kappa_o1)
      .def_readwrite("g_e", &SystemParams::g_e)
      .def_readwrite("g_o", &SystemParams::g_o)
      .def_readwrite("gamma_s", &SystemParams::gamma_s)
      .def_readwrite("gamma_p", &SystemParams::gamma_p);

  py::class_<ValidatedParams>(m, "ValidatedParams")
      .def_property_readonly("raw", &ValidatedParams::raw)
      .def_property_readonly("kappa_e", &ValidatedParams::kappa_e)
      .def_property_readonly("kappa_o", &ValidatedParams::kappa_o)
      .def_property_readonly("gamma", &ValidatedParams::gamma);

  m.def("validate", &validate, py::arg("params"),
        "Check rates and attach the derived kappa_e, kappa_o, gamma");

  py::class_<DetuningSet>(m, "DetuningSet")
      .def_readonly("delta_el", &DetuningSet::delta_el)
      .def_readonly("delta_ol", &DetuningSet::delta_ol)
      .def_readonly("delta_al", &DetuningSet::delta_al)
      .def_readonly("delta", &DetuningSet::delta)
      .def_readonly("Delta", &DetuningSet::Delta)
      .def_readonly("degenerate", &DetuningSet::degenerate);

  m.def("detunings", &detunings, py::arg("params"), py::arg("omega_l"));
  m.def("q_to_kappa", &q_to_kappa, py::arg("q"), py::arg("wavelength_m"),
        "Amplitude decay rate (rad/ns) of a resonator with quality factor q");

  m.def(
      "case_params",
      [](const std::string& id, double g) {
        const CasePreset p = case_params(case_from_string(id), g);
        return py::make_tuple(p.params, p.omega_l);
      },
      py::arg("case_id"), py::arg("g") = 30.0,
      "Named case preset -> (params, operating omega_l)");

  py::class_<SteadyState>(m, "SteadyState")
      .def_readonly("c_e", &SteadyState::c_e)
      .def_readonly("c_o", &SteadyState::c_o)
      .def_readonly("sigma", &SteadyState::sigma)
      .def_readonly("t", &SteadyState::t)
      .def_readonly("r", &SteadyState::r)
      .def_readonly("loss_cavity_e", &SteadyState::loss_cavity_e)
      .def_readonly("loss_cavity_o", &SteadyState::loss_cavity_o)
      .def_readonly("loss_emitter", &SteadyState::loss_emitter);

  m.def("solve_general", &solve_general, py::arg("params"), py::arg("omega_l"), py::arg("spin"));
  m.def("oracle_solve", &oracle_solve, py::arg("params"), py::arg("omega_l"), py::arg("spin"));
  m.def(
      "transmission_closed_form",
      [](double kappa0, double kappa1, double g, double gamma, double delta, double Delta,
         SpinState spin) {
        const ClosedFormResult r =
            transmission_closed_form(kappa0, kappa1, g, gamma, delta, Delta, spin);
        return py::make_tuple(r.t, r.dipole_dominated_limit);
      },
      py::arg("kappa0"), py::arg("kappa1"), py::arg("g_e_mag"), py::arg("gamma"), py::arg("delta"),
      py::arg("Delta"), py::arg("spin"),
      "Degenerate symmetric transmission -> (t, dipole_dominated_limit)");

  py::class_<SupermodeView>(m, "SupermodeView")
      .def_readonly("c_plus", &SupermodeView::c_plus)
      .def_readonly("c_minus", &SupermodeView::c_minus)
      .def_readonly("g_plus", &SupermodeView::g_plus)
      .def_readonly("g_minus", &SupermodeView::g_minus)
      .def_property_readonly("driven_by_port_one", [](const SupermodeView& v) {
        return v.driven_by_port_one == Supermode::Minus ? "minus" : "plus";
      });

  m.def("supermode_transform", &supermode_transform, py::arg("params"), py::arg("state"));

  py::class_<FluxReport>(m, "FluxReport")
      .def_readonly("transmitted", &FluxReport::transmitted)
      .def_readonly("reflected", &FluxReport::reflected)
      .def_readonly("loss_cavity_e", &FluxReport::loss_cavity_e)
      .def_readonly("loss_cavity_o", &FluxReport::loss_cavity_o)
      .def_readonly("loss_emitter", &FluxReport::loss_emitter)
      .def_readonly("residual", &FluxReport::residual);

  m.def("flux_balance", &flux_balance, py::arg("state"));

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("delta_grid", &Spectrum::delta_grid)
      .def_readonly("T", &Spectrum::T)
      .def_readonly("R", &Spectrum::R)
      .def_readonly("L", &Spectrum::L);

  m.def("sweep", &sweep, py::arg("params"), py::arg("spin"), py::arg("delta_min"),
        py::arg("delta_max"), py::arg("n_points"));

  py::class_<Peak>(m, "Peak")
      .def_readonly("delta", &Peak::delta)
      .def_readonly("height", &Peak::height);

  m.def("find_peaks", &find_peaks, py::arg("spectrum"), py::arg("min_prominence") = 0.01);
  m.def(
      "write_spectrum_csv",
      [](const Spectrum& s, const std::string& path) { emit(s, std::filesystem::path(path)); },
      py::arg("spectrum"), py::arg("path"));

  py::class_<PulseWaveform>(m, "PulseWaveform")
      .def_readonly("time_grid", &PulseWaveform::time_grid)
      .def_readonly("envelope_t", &PulseWaveform::envelope_t)
      .def_readonly("frequency_grid", &PulseWaveform::frequency_grid)
      .def_readonly("envelope_f", &PulseWaveform::envelope_f)
      .def_readonly("omega_l", &PulseWaveform::omega_l);

  m.def("gaussian_pulse", &gaussian_pulse, py::arg("tau"), py::arg("omega_l"),
        py::arg("half_span"), py::arg("n_samples"));
  m.def("waveform_from_samples", &waveform_from_samples, py::arg("envelope"), py::arg("omega_l"),
        py::arg("half_span"), "Custom pulse envelope on a uniform power-of-two grid");

  py::class_<OutputFields>(m, "OutputFields")
      .def_readonly("time_grid", &OutputFields::time_grid)
      .def_readonly("input", &OutputFields::input)
      .def_readonly("transmitted", &OutputFields::transmitted)
      .def_readonly("reflected", &OutputFields::reflected)
      .def_readonly("norm_t", &OutputFields::norm_t)
      .def_readonly("norm_r", &OutputFields::norm_r)
      .def_readonly("absorbed_cavity_e", &OutputFields::absorbed_cavity_e)
      .def_readonly("absorbed_cavity_o", &OutputFields::absorbed_cavity_o)
      .def_readonly("absorbed_emitter", &OutputFields::absorbed_emitter);

  m.def("propagate_frequency", &propagate_frequency, py::arg("params"), py::arg("spin"),
        py::arg("pulse"));
  m.def("propagate_time", &propagate_time, py::arg("params"), py::arg("spin"), py::arg("pulse"),
        py::arg("dt"));

  py::class_<ConditionalAmplitudes>(m, "ConditionalAmplitudes")
      .def(py::init([](Complex t_up, Complex t_down, Complex r_up, Complex r_down) {
             return ConditionalAmplitudes{t_up, t_down, r_up, r_down};
           }),
           py::arg("t_up"), py::arg("t_down"), py::arg("r_up") = Complex{0.0, 0.0},
           py::arg("r_down") = Complex{0.0, 0.0})
      .def_readonly("t_up", &ConditionalAmplitudes::t_up)
      .def_readonly("t_down", &ConditionalAmplitudes::t_down)
      .def_readonly("r_up", &ConditionalAmplitudes::r_up)
      .def_readonly("r_down", &ConditionalAmplitudes::r_down);

  m.def("conditional_amplitudes",
        py::overload_cast<const ValidatedParams&, double>(&conditional_amplitudes),
        py::arg("params"), py::arg("omega_l"));
  m.def("conditional_amplitudes",
        py::overload_cast<const ValidatedParams&, const PulseWaveform&>(&conditional_amplitudes),
        py::arg("params"), py::arg("pulse"));

  m.def(
      "fidelity",
      [](const ConditionalAmplitudes& amps, const std::string& definition) {
        if (definition == "amplitude")
          return fidelity(amps, FidelityDefinition::AmplitudeOverlap);
        if (definition == "probability")
          return fidelity(amps, FidelityDefinition::ProbabilityOverlap);
        throw std::invalid_argument("definition must be 'amplitude' or 'probability'");
      },
      py::arg("amps"), py::arg("definition") = "amplitude");

  m.def(
      "fidelity_sweep",
      [](const std::string& case_id, const std::string& variable, const std::vector<double>& grid,
         double g) {
        SweepVariable var;
        if (variable == "kappa1") var = SweepVariable::Kappa1;
        else if (variable == "gamma") var = SweepVariable::Gamma;
        else throw std::invalid_argument("variable must be 'kappa1' or 'gamma'");
        const FidelityCurve c = fidelity_sweep(case_from_string(case_id), var, grid, g);
        return py::make_tuple(c.x, c.F);
      },
      py::arg("case_id"), py::arg("variable"), py::arg("grid"), py::arg("g") = 30.0,
      "Case fidelity over a grid -> (x, F)");

  m.def("sweep_grid", &sweep_grid, py::arg("min"), py::arg("max"), py::arg("points"),
        py::arg("log_scale") = true);

  m.def("gate_matrix", &gate_matrix, py::arg("amps"));
  m.def("ideal_cz", &ideal_cz);
  m.def("identity_gate", &identity_gate);
  m.def("photon_rotation", &photon_rotation, py::arg("mat2"));
  m.def("spin_rotation", &spin_rotation, py::arg("mat2"));
  m.def("hadamard", &hadamard);
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def(
      "apply",
      [](const GateMatrix& op, const std::array<Complex, 4>& amplitudes) {
        return cdc::apply(op, TwoQubitState{amplitudes}).a;
      },
      py::arg("gate"), py::arg("state"),
      "Apply a 4x4 operator to a state in the basis {h_up, h_down, v_up, v_down}");
  m.def(
      "concurrence",
      [](const std::array<Complex, 4>& amplitudes) {
        return concurrence(TwoQubitState{amplitudes});
      },
      py::arg("state"));
  m.def(
      "truth_table",
      [](const ConditionalAmplitudes& amps) {
        py::list rows;
        for (const auto& row : truth_table(amps)) {
          py::dict d;
          d["input"] = row.input;
          d["amplitude"] = row.amplitude;
          d["ideal"] = row.ideal;
          d["deviation"] = row.deviation;
          rows.append(d);
        }
        return rows;
      },
      py::arg("amps"));

  m.attr("__version__") = "0.1.0";
}
