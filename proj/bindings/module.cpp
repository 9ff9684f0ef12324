#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hw/checks.hpp"
#include "hw/mennicke.hpp"
#include "hw/parse.hpp"
#include "hw/witt.hpp"

namespace py = pybind11;

namespace {

const hw::Presentation& presentation_by_name(const std::string& name) {
  using hw::PresId;
  static const std::vector<std::pair<std::string, PresId>> table = {
      {"k[s,t]", PresId::PolyST}, {"k[x]", PresId::PolyX}, {"k[a,x,y]", PresId::PolyAXY},
      {"R", PresId::R},           {"A", PresId::A},        {"R'", PresId::RP},
      {"R'[s]", PresId::RPS},
  };
  for (const auto& [key, id] : table)
    if (key == name) return hw::Presentation::get(id);
  hw::fail(hw::Err::BadParameter, "unknown presentation '" + name + "'");
}

hw::VerifyConfig make_config(const std::string& field, const std::string& u, int degree,
                             int trials, std::uint64_t seed) {
  hw::VerifyConfig config;
  config.field = hw::parse_field_spec(field);
  config.u_expr = u;
  config.degree = degree;
  config.trials = trials;
  config.seed = seed;
  return config;
}

py::list run_to_list(const hw::Report& report) {
  py::list out;
  for (const hw::CheckResult& r : report.checks) {
    py::dict d;
    d["id"] = r.id;
    d["status"] = r.status;
    d["paper_ref"] = r.paper_ref;
    d["witness"] = r.witness;
    d["ms"] = r.ms;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact verification kernel: characteristic-2 quotient-ring arithmetic, "
      "elementary-matrix certificates, symplectic Steinberg words, Witt-form "
      "computations, and Milnor patching.";

  py::register_exception<hw::Error>(m, "VerifyError");

  m.def("check_ids", &hw::check_ids, "Registered check identifiers.");

  m.def(
      "run",
      [](const std::string& selector, const std::string& field, const std::string& u,
         int degree, int trials, std::uint64_t seed) {
        return run_to_list(hw::run_checks(selector, make_config(field, u, degree, trials, seed)));
      },
      py::arg("selector") = "all", py::arg("field") = "f2-rational", py::arg("u") = "u",
      py::arg("degree") = 6, py::arg("trials") = 20, py::arg("seed") = 0,
      "Run one check (or all) and return the results as dicts.");

  m.def(
      "report_json",
      [](const std::string& selector, const std::string& field, const std::string& u,
         int degree, int trials, std::uint64_t seed) {
        return hw::report_json(
            hw::run_checks(selector, make_config(field, u, degree, trials, seed)));
      },
      py::arg("selector") = "all", py::arg("field") = "f2-rational", py::arg("u") = "u",
      py::arg("degree") = 6, py::arg("trials") = 20, py::arg("seed") = 0,
      "Run checks and return the machine-readable JSON report.");

  m.def(
      "normal_form",
      [](const std::string& pres, const std::string& field, const std::string& expr) {
        return hw::parse_element(presentation_by_name(pres), hw::parse_field_spec(field), expr)
            .str();
      },
      py::arg("presentation"), py::arg("field"), py::arg("expr"),
      "Canonical normal form of a ring-element expression, e.g. "
      "normal_form('R', 'f2-rational', 'a^2') == 'x*y'.");

  m.def(
      "is_square",
      [](const std::string& field, const std::string& expr) {
        auto root = hw::parse_scalar(hw::parse_field_spec(field), expr).sqrt();
        return py::make_tuple(root.has_value(),
                              root ? py::object(py::str(root->str())) : py::none());
      },
      py::arg("field"), py::arg("expr"),
      "Square test in the coefficient field; returns (flag, root).");

  m.def(
      "certificate_length",
      [](const std::string& field, const std::string& u) {
        hw::Field f = hw::parse_field_spec(field);
        return hw::run_lemma21_chain(f, hw::parse_scalar(f, u)).cert.factors.size();
      },
      py::arg("field") = "f2-rational", py::arg("u") = "u",
      "Length of the verified elementary certificate for diag(M0(u),1).");

  m.def(
      "distinctness",
      [](const std::string& field, const std::string& u) {
        hw::Field f = hw::parse_field_spec(field);
        hw::DistinctnessResult res = hw::rho_zbar_distinctness(f, hw::parse_scalar(f, u));
        py::dict d;
        d["distinct"] = res.distinct;
        d["u_is_square"] = res.u_is_square;
        d["witness"] = res.witness ? py::object(py::str(res.witness->str())) : py::none();
        d["trail"] = res.trail;
        return d;
      },
      py::arg("field") = "f2-rational", py::arg("u") = "u",
      "Witt-class distinctness decision with its verification trail.");

#ifdef HW_VERSION_INFO
  m.attr("__version__") = HW_VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
