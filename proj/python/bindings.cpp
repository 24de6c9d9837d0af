#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nclandau/commands.hpp"
#include "nclandau/errors.hpp"
#include "nclandau/landau_model.hpp"
#include "nclandau/nc_maps.hpp"
#include "nclandau/radial_oracle.hpp"
#include "nclandau/spectrum.hpp"
#include "nclandau/wavefunctions.hpp"

namespace py = pybind11;
using namespace nclandau;

namespace {

RunConfig config_from(const std::optional<std::string>& json_text, bool preset) {
  return build_run_config(json_text, preset, {});
}

std::string csv_of(const Table& t) {
  std::ostringstream out;
  write_csv(t, out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Landau levels on noncommutative phase space";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DegenerateRegimeError>(m, "DegenerateRegimeError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);

  py::class_<NCParams>(m, "NCParams")
      .def_static("commutative", &NCParams::commutative, py::arg("hbar") = 1.0)
      .def_static("space", &NCParams::space, py::arg("hbar"), py::arg("theta"))
      .def_static("phase", &NCParams::phase, py::arg("hbar"), py::arg("theta"), py::arg("alpha"))
      .def_property_readonly("hbar", &NCParams::hbar)
      .def_property_readonly("theta", &NCParams::theta)
      .def_property_readonly("theta_bar", &NCParams::theta_bar)
      .def_property_readonly("alpha", &NCParams::alpha)
      .def("constraint_residual", &NCParams::constraint_residual)
      .def("__repr__", [](const NCParams& p) {
        std::ostringstream s;
        s << "NCParams(hbar=" << p.hbar() << ", theta=" << p.theta()
          << ", theta_bar=" << p.theta_bar() << ", alpha=" << p.alpha() << ")";
        return s.str();
      });

  m.def("theta_bar_from", &theta_bar_from, py::arg("theta"), py::arg("alpha"), py::arg("hbar") = 1.0);

  py::class_<LandauConfig>(m, "LandauConfig")
      .def(py::init([](double q, double mu, double B, double c, double hbar) {
             return LandauConfig{q, mu, B, c, hbar};
           }),
           py::arg("q") = 1.0, py::arg("mu") = 1.0, py::arg("B") = 2.0, py::arg("c") = 1.0,
           py::arg("hbar") = 1.0)
      .def_readwrite("q", &LandauConfig::q)
      .def_readwrite("mu", &LandauConfig::mu)
      .def_readwrite("B", &LandauConfig::B)
      .def_readwrite("c", &LandauConfig::c)
      .def_readwrite("hbar", &LandauConfig::hbar)
      .def("larmor_frequency", &LandauConfig::larmor_frequency);

  py::class_<EffectiveOscillator>(m, "EffectiveOscillator")
      .def_readonly("mu_eff", &EffectiveOscillator::mu_eff)
      .def_readonly("omega_eff", &EffectiveOscillator::omega_eff)
      .def_readonly("zeta_sq", &EffectiveOscillator::zeta_sq)
      .def_readonly("a_coef", &EffectiveOscillator::a_coef)
      .def_readonly("b_coef", &EffectiveOscillator::b_coef);

  m.def("effective_oscillator", &effective_oscillator, py::arg("config"), py::arg("params"));
  m.def(
      "decompose_hamiltonian",
      [](const LandauConfig& cfg, const NCParams& p) {
        const BoppMap map = p.is_space_limit() ? bopp_space(p) : bopp_phase(p);
        return decompose(build_hamiltonian(cfg, map), cfg);
      },
      py::arg("config"), py::arg("params"),
      "Effective oscillator read off the expanded Bopp-shifted Hamiltonian.");
  m.def(
      "algebra_max_deviation",
      [](const NCParams& p) {
        return verify_algebra(p.is_space_limit() ? bopp_space(p) : bopp_phase(p), p).max_deviation;
      },
      py::arg("params"));

  py::class_<SpectrumEntry>(m, "SpectrumEntry")
      .def_property_readonly("n_rho", [](const SpectrumEntry& e) { return e.qn.n_rho; })
      .def_property_readonly("m", [](const SpectrumEntry& e) { return e.qn.m; })
      .def_property_readonly("k", [](const SpectrumEntry& e) { return e.qn.k; })
      .def_readonly("e_xy", &SpectrumEntry::e_xy)
      .def_readonly("e_lz", &SpectrumEntry::e_lz)
      .def_readonly("e_par", &SpectrumEntry::e_par)
      .def_readonly("e_total", &SpectrumEntry::e_total);

  m.def(
      "energy",
      [](const EffectiveOscillator& eff, const LandauConfig& cfg, int n_rho, int m_q, double k) {
        return energy({n_rho, m_q, k}, eff, cfg);
      },
      py::arg("eff"), py::arg("config"), py::arg("n_rho"), py::arg("m"), py::arg("k") = 0.0);
  m.def(
      "enumerate_levels",
      [](const EffectiveOscillator& eff, const LandauConfig& cfg, int max_N, int m_lo, int m_hi,
         double k) { return enumerate_levels(eff, cfg, max_N, {m_lo, m_hi}, k); },
      py::arg("eff"), py::arg("config"), py::arg("max_N"), py::arg("m_lo"), py::arg("m_hi"),
      py::arg("k") = 0.0);

  m.def(
      "oracle_eigenvalues",
      [](const EffectiveOscillator& eff, const LandauConfig& cfg, int m_q, int n_max, int n_points,
         double rho_max_factor) {
        const RadialGrid grid{rho_max_factor / std::sqrt(eff.zeta_sq), n_points};
        std::vector<double> out;
        for (const auto& e : compare(eff, m_q, grid, cfg, n_max).entries) out.push_back(e.oracle);
        return out;
      },
      py::arg("eff"), py::arg("config"), py::arg("m"), py::arg("n_max") = 2,
      py::arg("n_points") = 4000, py::arg("rho_max_factor") = 12.0,
      "Lowest finite-difference eigenvalues of the radial operator in channel m.");

  m.def("kummer_poly", &kummer_poly, py::arg("n"), py::arg("b"), py::arg("x"));
  m.def(
      "radial_norm",
      [](int n_rho, int m_q, double zeta_sq) { return normalize(n_rho, m_q, zeta_sq).norm; },
      py::arg("n_rho"), py::arg("m"), py::arg("zeta_sq"));
  m.def(
      "radial_values",
      [](int n_rho, int m_q, double zeta_sq, const std::vector<double>& rho) {
        const RadialWavefunction wf = normalize(n_rho, m_q, zeta_sq);
        std::vector<double> out;
        out.reserve(rho.size());
        for (const double r : rho) out.push_back(radial_eval(wf, r));
        return out;
      },
      py::arg("n_rho"), py::arg("m"), py::arg("zeta_sq"), py::arg("rho"));

  m.def(
      "spectrum_csv",
      [](const std::optional<std::string>& json_text, bool preset) {
        return csv_of(cmd_spectrum(config_from(json_text, preset)));
      },
      py::arg("config_json") = py::none(), py::arg("preset") = true);
  m.def(
      "sweep_csv",
      [](const std::string& json_text, bool preset) {
        return csv_of(cmd_sweep(config_from(json_text, preset)));
      },
      py::arg("config_json"), py::arg("preset") = true);
  m.def(
      "verify",
      [](const std::optional<std::string>& json_text, bool preset) {
        const VerifyReport r = cmd_verify(config_from(json_text, preset));
        py::list checks;
        for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.pass, c.detail));
        return py::make_tuple(r.pass, checks);
      },
      py::arg("config_json") = py::none(), py::arg("preset") = true,
      "Returns (all_passed, [(name, passed, detail), ...]).");

#ifdef VERSION_INFO
#define NCLANDAU_STR2(x) #x
#define NCLANDAU_STR(x) NCLANDAU_STR2(x)
  m.attr("__version__") = NCLANDAU_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
