#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mfising/criticality.hpp"
#include "mfising/curve.hpp"
#include "mfising/entropy_surface.hpp"
#include "mfising/finite_oracle.hpp"
#include "mfising/ideal_gas.hpp"
#include "mfising/self_consistent.hpp"

namespace py = pybind11;
using namespace mfising;

namespace {

ModelParams make_params(double J, int z, double k, std::int64_t N) {
  ModelParams p{J, z, k, N};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Mean-field Ising entropy as a Hamilton-Jacobi principal function";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init(&make_params), py::arg("J") = 1.0, py::arg("z") = 1, py::arg("k") = 1.0,
           py::arg("N") = 12)
      .def_readwrite("J", &ModelParams::J)
      .def_readwrite("z", &ModelParams::z)
      .def_readwrite("k", &ModelParams::k)
      .def_readwrite("N", &ModelParams::N)
      .def_property_readonly("jz", &ModelParams::jz);

  py::class_<ConjugateCoords>(m, "ConjugateCoords")
      .def(py::init<double, double>(), py::arg("beta"), py::arg("xi"))
      .def_readwrite("beta", &ConjugateCoords::beta)
      .def_readwrite("xi", &ConjugateCoords::xi);

  py::class_<FieldCoords>(m, "FieldCoords")
      .def_readonly("T", &FieldCoords::T)
      .def_readonly("h", &FieldCoords::h);

  py::class_<CurveSample>(m, "CurveSample")
      .def_readonly("m", &CurveSample::m)
      .def_readonly("beta", &CurveSample::beta)
      .def_readonly("xi", &CurveSample::xi)
      .def_readonly("T", &CurveSample::T)
      .def_readonly("h", &CurveSample::h)
      .def_readonly("u", &CurveSample::u)
      .def_readonly("s", &CurveSample::s)
      .def_readonly("chi", &CurveSample::chi)
      .def_readonly("c", &CurveSample::c);

  const ModelParams defaults{};
  m.def("beta_of_m", &beta_of_m, py::arg("m"), py::arg("params") = defaults);
  m.def("xi_of_m", &xi_of_m, py::arg("m"), py::arg("params") = defaults);
  m.def("u_of_m", &u_of_m, py::arg("m"), py::arg("params") = defaults);
  m.def("s_of_m", &s_of_m, py::arg("m"), py::arg("params") = defaults);
  m.def("to_field_coords", &to_field_coords, py::arg("coords"), py::arg("params") = defaults);
  m.def(
      "sample_curve",
      [](double lo, double hi, int n, const std::string& spacing, const ModelParams& p) {
        if (spacing != "linear" && spacing != "log") {
          throw DomainError("spacing must be 'linear' or 'log'");
        }
        return sample_curve(lo, hi, n, spacing == "log" ? Spacing::Log : Spacing::Linear, p);
      },
      py::arg("m_min"), py::arg("m_max"), py::arg("n_samples"), py::arg("spacing") = "linear",
      py::arg("params") = defaults);

  py::class_<ThermoState>(m, "ThermoState")
      .def(py::init<double, double>(), py::arg("U"), py::arg("M"))
      .def_readwrite("U", &ThermoState::U)
      .def_readwrite("M", &ThermoState::M);
  py::class_<EntropyGradient>(m, "EntropyGradient")
      .def_readonly("dU", &EntropyGradient::dU)
      .def_readonly("dM", &EntropyGradient::dM);

  m.def(
      "entropy",
      [](double U, double M, const ModelParams& p, double a) { return entropy({U, M}, p, {a}); },
      py::arg("U"), py::arg("M"), py::arg("params") = defaults, py::arg("a") = 0.0);
  m.def(
      "gradient",
      [](double U, double M, const ModelParams& p, double a) { return gradient({U, M}, p, {a}); },
      py::arg("U"), py::arg("M"), py::arg("params") = defaults, py::arg("a") = 0.0);
  m.def(
      "hj_residual",
      [](double U, double M, const ModelParams& p, double a) {
        return hj_residual({U, M}, p, {a});
      },
      py::arg("U"), py::arg("M"), py::arg("params") = defaults, py::arg("a") = 0.0);

  py::enum_<Stability>(m, "Stability")
      .value("Stable", Stability::Stable)
      .value("Unstable", Stability::Unstable);
  py::class_<Root>(m, "Root")
      .def_readonly("m", &Root::m)
      .def_readonly("stability", &Root::stability)
      .def_readonly("massieu_per_site", &Root::massieu_per_site);
  py::class_<RootSet>(m, "RootSet")
      .def_readonly("roots", &RootSet::roots)
      .def_readonly("selected", &RootSet::selected)
      .def_property_readonly("equilibrium", &RootSet::equilibrium);
  py::class_<ZeroFieldPoint>(m, "ZeroFieldPoint")
      .def_readonly("beta", &ZeroFieldPoint::beta)
      .def_readonly("m_plus", &ZeroFieldPoint::m_plus)
      .def_readonly("s_per_site", &ZeroFieldPoint::s_per_site)
      .def_readonly("lambda_", &ZeroFieldPoint::lambda);

  m.def(
      "solve", [](double beta, double xi, const ModelParams& p) { return solve({beta, xi}, p); },
      py::arg("beta"), py::arg("xi"), py::arg("params") = defaults);
  m.def("zero_field_branch", &zero_field_branch, py::arg("beta_lo"), py::arg("beta_hi"),
        py::arg("n"), py::arg("params") = defaults);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("log_Xi", &OracleResult::log_Xi)
      .def_readonly("Psi", &OracleResult::Psi)
      .def_readonly("M_numeric", &OracleResult::M_numeric)
      .def_readonly("U_numeric", &OracleResult::U_numeric)
      .def_readonly("S_entropy1", &OracleResult::S_entropy1);
  py::class_<ConsistencyReport>(m, "ConsistencyReport")
      .def_readonly("oracle", &ConsistencyReport::oracle)
      .def_readonly("M_expected", &ConsistencyReport::M_expected)
      .def_readonly("U_expected", &ConsistencyReport::U_expected)
      .def_readonly("M_relative_error", &ConsistencyReport::M_relative_error)
      .def_readonly("U_relative_error", &ConsistencyReport::U_relative_error)
      .def_property_readonly("consistent", &ConsistencyReport::consistent);

  m.def(
      "log_partition_enum",
      [](double mm, double beta, double xi, const ModelParams& p) {
        return log_partition_enum(mm, {beta, xi}, p);
      },
      py::arg("m"), py::arg("beta"), py::arg("xi"), py::arg("params") = defaults);
  m.def(
      "log_partition_binom",
      [](double mm, double beta, double xi, const ModelParams& p) {
        return log_partition_binom(mm, {beta, xi}, p);
      },
      py::arg("m"), py::arg("beta"), py::arg("xi"), py::arg("params") = defaults);
  m.def(
      "check_self_consistency",
      [](double mm, double beta, double xi, const ModelParams& p, double step) {
        return check_self_consistency(mm, {beta, xi}, p, step);
      },
      py::arg("m"), py::arg("beta"), py::arg("xi"), py::arg("params") = defaults,
      py::arg("step") = 1e-6);
  m.def(
      "check_entropy_offset",
      [](double mm, double beta, double xi, const ModelParams& p) {
        return check_entropy_offset(mm, {beta, xi}, p);
      },
      py::arg("m"), py::arg("beta"), py::arg("xi"), py::arg("params") = defaults);

  m.def("susceptibility", &susceptibility, py::arg("m"), py::arg("params") = defaults);
  m.def("specific_heat", &specific_heat, py::arg("m"), py::arg("params") = defaults);
  m.def("reduced_temperature", &reduced_temperature, py::arg("m"), py::arg("params") = defaults);
  m.def("jacobian_norm", &jacobian_norm, py::arg("m"), py::arg("params") = defaults);

  py::class_<FitWindow>(m, "FitWindow")
      .def(py::init<double, double, int>(), py::arg("m_lo") = 1e-3, py::arg("m_hi") = 1e-2,
           py::arg("n_points") = 20)
      .def_readwrite("m_lo", &FitWindow::m_lo)
      .def_readwrite("m_hi", &FitWindow::m_hi)
      .def_readwrite("n_points", &FitWindow::n_points);
  py::class_<ExponentFit>(m, "ExponentFit")
      .def_readonly("name", &ExponentFit::name)
      .def_readonly("value", &ExponentFit::value)
      .def_readonly("slope", &ExponentFit::slope)
      .def_readonly("residual", &ExponentFit::residual)
      .def_readonly("target", &ExponentFit::target)
      .def_readonly("tolerance", &ExponentFit::tolerance)
      .def_readonly("window", &ExponentFit::window)
      .def("within_tolerance", &ExponentFit::within_tolerance);
  py::class_<ExponentReport>(m, "ExponentReport")
      .def_readonly("delta", &ExponentReport::delta)
      .def_readonly("beta", &ExponentReport::beta)
      .def_readonly("gamma", &ExponentReport::gamma)
      .def_readonly("alpha", &ExponentReport::alpha)
      .def_readonly("alpha_flag", &ExponentReport::alpha_flag)
      .def_readonly("chi_sign", &ExponentReport::chi_sign)
      .def("all_within_tolerance", &ExponentReport::all_within_tolerance);
  m.def(
      "fit_exponents",
      [](const ModelParams& p, const FitWindow& w) { return fit_exponents(p, {w, w, w, w}); },
      py::arg("params") = defaults, py::arg("window") = FitWindow{});

  py::class_<GasState>(m, "GasState")
      .def(py::init<double, double, double, double>(), py::arg("U"), py::arg("V"),
           py::arg("r") = 1.0, py::arg("S0") = 0.0)
      .def_readwrite("U", &GasState::U)
      .def_readwrite("V", &GasState::V)
      .def_readwrite("r", &GasState::r)
      .def_readwrite("S0", &GasState::S0);
  py::class_<GasEos>(m, "GasEos")
      .def_readonly("T", &GasEos::T)
      .def_readonly("p", &GasEos::p)
      .def_readonly("energy_mismatch", &GasEos::energy_mismatch)
      .def_readonly("state_mismatch", &GasEos::state_mismatch);
  m.def("gas_entropy", &gas_entropy, py::arg("state"));
  m.def("gas_hj_residual", &gas_hj_residual, py::arg("state"));
  m.def("gas_recover_eos", &gas_recover_eos, py::arg("state"));
}
