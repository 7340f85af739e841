#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rsi/errors.hpp"
#include "rsi/model.hpp"
#include "rsi/report.hpp"
#include "rsi/specfun.hpp"
#include "rsi/verify.hpp"
#include "rsi/wavefun.hpp"

namespace py = pybind11;
using namespace rsi;

namespace {

Model make_model(const std::string& kase, const ModelParams& p, const NumericsConfig& n) {
  return Model(parse_case(kase), p, n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical verification of Ruijsenaars source and kernel identities";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<BranchError>(m, "BranchError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

  py::enum_<ModelCase>(m, "ModelCase")
      .value("Rational", ModelCase::Rational)
      .value("Trigonometric", ModelCase::Trigonometric)
      .value("Hyperbolic", ModelCase::Hyperbolic)
      .value("Elliptic", ModelCase::Elliptic);

  py::enum_<MassLabel>(m, "MassLabel")
      .value("PlusM0", MassLabel::PlusM0)
      .value("MinusM0", MassLabel::MinusM0)
      .value("MinusInvGM0", MassLabel::MinusInvGM0)
      .value("PlusInvGM0", MassLabel::PlusInvGM0);

  py::enum_<QRep>(m, "QRep")
      .value("Product", QRep::Product)
      .value("LogSeries", QRep::LogSeries)
      .value("Auto", QRep::Auto);

  py::enum_<GammaFamily>(m, "GammaFamily")
      .value("G1", GammaFamily::G1)
      .value("G2", GammaFamily::G2)
      .value("G3", GammaFamily::G3)
      .value("G4", GammaFamily::G4);

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double g, double beta, double r, double a, double m0) {
             return ModelParams{g, beta, r, a, m0};
           }),
           py::arg("g") = 2.0, py::arg("beta") = 0.3, py::arg("r") = 1.0, py::arg("a") = 1.5,
           py::arg("m0") = 1.0)
      .def_readwrite("g", &ModelParams::g)
      .def_readwrite("beta", &ModelParams::beta)
      .def_readwrite("r", &ModelParams::r)
      .def_readwrite("a", &ModelParams::a)
      .def_readwrite("m0", &ModelParams::m0);

  py::class_<NumericsConfig>(m, "NumericsConfig")
      .def(py::init<>())
      .def_readwrite("truncation_L", &NumericsConfig::truncation_L)
      .def_readwrite("quad_abs_tol", &NumericsConfig::quad_abs_tol)
      .def_readwrite("fd_step", &NumericsConfig::fd_step)
      .def_readwrite("residual_tol", &NumericsConfig::residual_tol)
      .def_readwrite("rng_seed", &NumericsConfig::rng_seed);

  py::class_<Model>(m, "Model")
      .def(py::init(&make_model), py::arg("case"), py::arg("params") = ModelParams{},
           py::arg("numerics") = NumericsConfig{})
      .def_readonly("params", &Model::params)
      .def_readonly("numerics", &Model::numerics);

  m.def("mass_value", &mass_value, py::arg("label"), py::arg("params"));
  m.def(
      "s", [](const Model& model, cplx x, int order) { return s_eval(model, x, order); },
      py::arg("model"), py::arg("x"), py::arg("order") = 0);
  m.def(
      "qprod", [](cplx z, cplx q, QRep rep) { return qprod_f({z, q}, rep); }, py::arg("z"),
      py::arg("q"), py::arg("rep") = QRep::Auto);
  m.def("euler_gamma", &euler_gamma, py::arg("z"));
  m.def("gamma_G", &gamma_G, py::arg("model"), py::arg("x"), py::arg("alpha"),
        py::arg("family") = GammaFamily::G1);
  m.def("gamma_main", &gamma_main, py::arg("model"), py::arg("x"), py::arg("alpha"));
  m.def("gamma_functional_residual", &gamma_functional_residual, py::arg("model"), py::arg("x"),
        py::arg("alpha"));
  m.def(
      "hyperbolic_GR", [](double a, cplx alpha, cplx x) { return hyperbolic_GR(a, alpha, x); },
      py::arg("a"), py::arg("alpha"), py::arg("x"));

  m.def(
      "build_Phi",
      [](const std::vector<cplx>& X, const std::vector<MassLabel>& labels, const Model& model) {
        return build_Phi(X, labels, model);
      },
      py::arg("X"), py::arg("labels"), py::arg("model"));
  m.def(
      "build_PsiN",
      [](const std::vector<cplx>& xs, const Model& model) {
        return build_PsiN(xs, model.params.g, model.params.beta, model);
      },
      py::arg("x"), py::arg("model"));

  py::class_<Residual>(m, "Residual")
      .def_readonly("value", &Residual::value)
      .def_readonly("scale", &Residual::scale)
      .def("rel", &Residual::rel);

  m.def(
      "residual_WH",
      [](const Model& model, cplx gamma, const std::vector<cplx>& Z, const std::vector<double>& masses) {
        return residual_WH(model, gamma, Z, masses);
      },
      py::arg("model"), py::arg("gamma"), py::arg("Z"), py::arg("masses"));
  m.def(
      "residual_source_identity",
      [](int sign, const Model& model, const std::vector<cplx>& X, const std::vector<MassLabel>& labels) {
        return residual_source_identity(sign, model, X, labels);
      },
      py::arg("sign"), py::arg("model"), py::arg("X"), py::arg("labels"));
  m.def(
      "residual_corollary",
      [](int which, int sign, const Model& model, std::array<int, 4> sizes, const std::vector<cplx>& X,
         cplx v) { return residual_corollary(which, sign, model, {sizes[0], sizes[1], sizes[2], sizes[3]}, X, v); },
      py::arg("which"), py::arg("sign"), py::arg("model"), py::arg("sizes"), py::arg("X"),
      py::arg("v") = cplx(0.0));

  py::class_<IdentityCase>(m, "IdentityCase")
      .def_property_readonly("identity", [](const IdentityCase& c) { return std::string(to_string(c.id)); })
      .def_property_readonly("case", [](const IdentityCase& c) { return std::string(to_string(c.kase)); })
      .def_readonly("sign", &IdentityCase::sign)
      .def_readonly("samples", &IdentityCase::samples)
      .def_readonly("expect_fail", &IdentityCase::expect_fail)
      .def_readonly("tolerance", &IdentityCase::tolerance)
      .def("describe", &IdentityCase::describe);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("identity", &ResidualReport::identity)
      .def_readonly("max_rel_residual", &ResidualReport::max_rel_residual)
      .def_readonly("passed", &ResidualReport::passed)
      .def_readonly("skipped", &ResidualReport::skipped)
      .def_readonly("reason", &ResidualReport::reason)
      .def_readonly("rejected", &ResidualReport::rejected)
      .def_readonly("measured_constants", &ResidualReport::measured_constants)
      .def_property_readonly("residuals", [](const ResidualReport& r) {
        std::vector<double> out;
        for (const auto& s : r.samples) out.push_back(s.rel());
        return out;
      });

  m.def("default_suite", &default_suite);
  m.def(
      "select",
      [](const std::vector<IdentityCase>& suite, const std::string& identity, const std::string& kase) {
        std::vector<IdentityCase> out;
        for (const auto& c : suite)
          if ((identity.empty() || c.id == parse_identity(identity)) &&
              (kase.empty() || c.kase == parse_case(kase)))
            out.push_back(c);
        return out;
      },
      py::arg("suite"), py::arg("identity") = "", py::arg("case") = "");
  m.def(
      "run_suite",
      [](const std::vector<IdentityCase>& suite, const NumericsConfig& numerics, unsigned threads) {
        py::gil_scoped_release release;
        return run_suite(suite, numerics, threads);
      },
      py::arg("suite"), py::arg("numerics") = NumericsConfig{}, py::arg("threads") = 0u);
  m.def(
      "render_json",
      [](const std::vector<ResidualReport>& results, const NumericsConfig& numerics) {
        ReportHeader h;
        h.seed = numerics.rng_seed;
        h.numerics = numerics;
        return render_json(h, results);
      },
      py::arg("results"), py::arg("numerics") = NumericsConfig{});
  m.def("all_passed", &all_passed, py::arg("results"));
}
