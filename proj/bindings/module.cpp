#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heatflux/analysis.hpp"
#include "heatflux/config.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/stationary.hpp"
#include "heatflux/transient.hpp"
#include "heatflux/validation.hpp"

namespace py = pybind11;
using namespace heatflux;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stationary and time-resolved radiative heat transfer between "
            "two small particles";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotConverged>(m, "NotConverged", PyExc_RuntimeError);
  py::register_exception<TooCoarse>(m, "TooCoarse", PyExc_ValueError);
  py::register_exception<DegenerateFit>(m, "DegenerateFit", PyExc_ValueError);

  py::class_<DrudeLorentzParams>(m, "DrudeLorentzParams")
      .def(py::init([](double eps_inf, double omega0, double omegap,
                       double gamma) {
             DrudeLorentzParams p;
             p.eps_inf = eps_inf;
             p.omega0 = omega0;
             p.omegap = omegap;
             p.gamma = gamma;
             return p;
           }),
           py::arg("eps_inf"), py::arg("omega0"), py::arg("omegap"),
           py::arg("gamma"))
      .def_readwrite("eps_inf", &DrudeLorentzParams::eps_inf)
      .def_readwrite("omega0", &DrudeLorentzParams::omega0)
      .def_readwrite("omegap", &DrudeLorentzParams::omegap)
      .def_readwrite("gamma", &DrudeLorentzParams::gamma);

  py::class_<Particle>(m, "Particle")
      .def_static("make", &Particle::make, py::arg("material"),
                  py::arg("radius"))
      .def_readonly("material", &Particle::material)
      .def_readonly("radius", &Particle::radius)
      .def_readonly("volume", &Particle::volume);

  py::class_<PairConfig>(m, "PairConfig")
      .def(py::init([](const Particle& p1, const Particle& p2, double d,
                       double T1) {
             PairConfig c;
             c.particle1 = p1;
             c.particle2 = p2;
             c.d = d;
             c.T1 = T1;
             validate_pair(c);
             return c;
           }),
           py::arg("particle1"), py::arg("particle2"), py::arg("d"),
           py::arg("T1"))
      .def_readwrite("particle1", &PairConfig::particle1)
      .def_readwrite("particle2", &PairConfig::particle2)
      .def_readwrite("d", &PairConfig::d)
      .def_readwrite("T1", &PairConfig::T1);

  py::class_<DerivedMaterial>(m, "DerivedMaterial")
      .def_readonly("beta", &DerivedMaterial::beta)
      .def_readonly("beta_tilde", &DerivedMaterial::beta_tilde)
      .def_readonly("omega0_alpha", &DerivedMaterial::omega0_alpha)
      .def_readonly("alpha_inf", &DerivedMaterial::alpha_inf);

  py::class_<ThermalScales>(m, "ThermalScales")
      .def_readonly("omega_T", &ThermalScales::omega_T)
      .def_readonly("lambda_T", &ThermalScales::lambda_T);

  py::class_<StationaryResult>(m, "StationaryResult")
      .def_readonly("value", &StationaryResult::value)
      .def_readonly("absolute", &StationaryResult::absolute)
      .def_readonly("channels", &StationaryResult::channels)
      .def_readonly("channels_resolved", &StationaryResult::channels_resolved);

  py::class_<FluxDecomposition>(m, "FluxDecomposition")
      .def_readonly("tau", &FluxDecomposition::tau)
      .def_readonly("total", &FluxDecomposition::total)
      .def_readonly("udot", &FluxDecomposition::udot)
      .def_readonly("transfer", &FluxDecomposition::transfer);

  py::class_<TimeSeries>(m, "TimeSeries")
      .def_readonly("taus", &TimeSeries::taus)
      .def_readonly("total", &TimeSeries::total)
      .def_readonly("udot", &TimeSeries::udot)
      .def_readonly("transfer", &TimeSeries::transfer);

  py::enum_<FluxChannel>(m, "FluxChannel")
      .value("total", FluxChannel::total)
      .value("udot", FluxChannel::udot)
      .value("transfer", FluxChannel::transfer);

  py::class_<ExtremumPoint>(m, "ExtremumPoint")
      .def_readonly("tau", &ExtremumPoint::tau)
      .def_readonly("value", &ExtremumPoint::value);

  py::class_<ExtremaSet>(m, "ExtremaSet")
      .def_readonly("maxima", &ExtremaSet::maxima)
      .def_readonly("minima", &ExtremaSet::minima)
      .def_readonly("averages", &ExtremaSet::averages);

  py::class_<FitParams>(m, "FitParams")
      .def_readonly("a", &FitParams::a)
      .def_readonly("b", &FitParams::b)
      .def_readonly("tau_max", &FitParams::tau_max)
      .def_readonly("phi_max", &FitParams::phi_max)
      .def_readonly("H_st", &FitParams::H_st)
      .def_readonly("gamma", &FitParams::gamma);

  py::class_<FarFieldApprox>(m, "FarFieldApprox")
      .def_readonly("value", &FarFieldApprox::value)
      .def_readonly("out_of_validity", &FarFieldApprox::out_of_validity);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("name", &OracleReport::name)
      .def_readonly("samples", &OracleReport::samples)
      .def_readonly("max_rel_err", &OracleReport::max_rel_err)
      .def_readonly("pass_", &OracleReport::pass)
      .def_readonly("worst_case", &OracleReport::worst_case);

  py::class_<TransientEvaluator>(m, "TransientEvaluator")
      .def(py::init([](const PairConfig& cfg, double rel_tol,
                       double omega_max) {
             return TransientEvaluator(cfg, rel_tol, PhysicalConstants{},
                                       omega_max);
           }),
           py::arg("config"), py::arg("rel_tol") = 1e-8,
           py::arg("omega_max") = 0.0)
      .def("flux_at", &TransientEvaluator::flux_at, py::arg("tau"),
           py::call_guard<py::gil_scoped_release>())
      .def("udot_spectrum", &TransientEvaluator::udot_spectrum,
           py::arg("omega"), py::arg("tau"))
      .def("transfer_spectrum", &TransientEvaluator::transfer_spectrum,
           py::arg("omega"), py::arg("tau"))
      .def("limit_tau0", &TransientEvaluator::limit_tau0)
      .def("energy_density_E0", &TransientEvaluator::energy_density_E0,
           py::arg("tau"), py::arg("absolute") = false)
      .def("energy_density_H", &TransientEvaluator::energy_density_H,
           py::arg("tau"), py::arg("absolute") = false)
      .def("ddt_uE0", &TransientEvaluator::ddt_uE0, py::arg("tau"),
           py::arg("absolute") = false)
      .def("stationary_value", &TransientEvaluator::stationary_value);

  m.def("derived_material", &derived_material, py::arg("particle"));
  m.def(
      "thermal_scales",
      [](double T) { return thermal_scales(T, PhysicalConstants{}); },
      py::arg("T"));
  m.def(
      "stationary_flux",
      [](const PairConfig& cfg, bool absolute, double rel_tol,
         double omega_max) {
        return stationary_flux(cfg, absolute, rel_tol, PhysicalConstants{},
                               omega_max);
      },
      py::arg("config"), py::arg("absolute") = false,
      py::arg("rel_tol") = 1e-8, py::arg("omega_max") = 0.0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "flux_at",
      [](const PairConfig& cfg, double tau, double rel_tol) {
        return flux_at(cfg, tau, rel_tol);
      },
      py::arg("config"), py::arg("tau"), py::arg("rel_tol") = 1e-8,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "flux_series",
      [](const PairConfig& cfg, double tau_min, double tau_max,
         int samples_per_period, double rel_tol, double omega_max) {
        return flux_series(cfg, tau_min, tau_max, samples_per_period, rel_tol,
                           PhysicalConstants{}, omega_max);
      },
      py::arg("config"), py::arg("tau_min"), py::arg("tau_max"),
      py::arg("samples_per_period") = 64, py::arg("rel_tol") = 1e-8,
      py::arg("omega_max") = 0.0, py::call_guard<py::gil_scoped_release>());
  m.def("find_extrema", &find_extrema, py::arg("series"),
        py::arg("channel") = FluxChannel::total, py::arg("period_hint") = 0.0);
  m.def("flux_average_model", &flux_average_model, py::arg("h_st"),
        py::arg("gamma"), py::arg("tau"));
  m.def("fit_max_params", &fit_max_params, py::arg("tau_max"),
        py::arg("phi_max"), py::arg("h_st"), py::arg("gamma"));
  m.def("flux_max_model", &flux_max_model, py::arg("fit"), py::arg("tau"));
  m.def("near_field_approx", &near_field_approx, py::arg("fit"),
        py::arg("omega0_alpha"), py::arg("tau"));
  m.def("far_field_approx", &far_field_approx, py::arg("h_st"),
        py::arg("gamma"), py::arg("omega0_alpha"), py::arg("tau"));
  m.def(
      "run_all_oracles",
      [](const PairConfig& cfg, std::uint64_t seed) {
        return run_all_oracles(cfg, seed);
      },
      py::arg("config"), py::arg("seed") = kDefaultOracleSeed,
      py::call_guard<py::gil_scoped_release>());
  m.def("format_reports", &format_reports, py::arg("reports"));
  m.def("preset_names", &preset_names);
  m.def(
      "preset_pair",
      [](const std::string& name) { return preset_config(name).pair; },
      py::arg("name"));

  m.attr("__version__") = "0.1.0";
}
