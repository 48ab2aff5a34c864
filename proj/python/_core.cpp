#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holder/checklist.hpp"
#include "holder/constants.hpp"
#include "holder/errors.hpp"
#include "holder/holder_core.hpp"
#include "holder/optimizer.hpp"
#include "holder/report.hpp"
#include "holder/special_points.hpp"

namespace py = pybind11;

namespace {

py::dict record_dict(const holder::QuotientRecord& r) {
  py::dict d;
  d["x"] = r.x;
  d["y"] = r.y;
  d["alpha_exp"] = r.alpha_exp;
  d["q"] = r.q;
  d["interval_index"] = r.interval_index;
  d["provenance"] = holder::to_string(r.provenance);
  return d;
}

py::dict check_dict(const holder::CheckResult& c) {
  py::dict d;
  d["id"] = c.id;
  d["anchor"] = c.anchor;
  d["verdict"] = holder::to_string(c.verdict);
  d["certified"] = c.certified;
  d["margin"] = py::make_tuple(c.margin.lo(), c.margin.hi());
  d["detail"] = c.detail;
  return d;
}

py::list check_list(const std::vector<holder::CheckResult>& checks) {
  py::list out;
  for (const auto& c : checks) out.append(check_dict(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified checks for the Holder-1/2 bound of f(x) = x sin(1/x)";

  py::register_exception<holder::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<holder::RemapFailure>(m, "RemapFailure", PyExc_RuntimeError);
  py::register_exception<holder::CertificationFailure>(m, "CertificationFailure", PyExc_RuntimeError);
  py::register_exception<holder::ArgumentTooLarge>(m, "ArgumentTooLarge", PyExc_OverflowError);
  py::register_exception<holder::DomainError>(m, "DomainError", PyExc_ValueError);

  m.attr("__version__") = holder::tool_version();
  m.attr("MAX_INDEX") = holder::kMaxIndex;

  m.def("f", py::overload_cast<double>(&holder::f), py::arg("x"));
  m.def("df", py::overload_cast<double>(&holder::df), py::arg("x"));
  m.def("ddf", py::overload_cast<double>(&holder::ddf), py::arg("x"));
  m.def(
      "f_enclosure",
      [](double lo, double hi) {
        const holder::Interval v = holder::f(holder::Interval{lo, hi});
        return py::make_tuple(v.lo(), v.hi());
      },
      py::arg("lo"), py::arg("hi"));
  m.def(
      "quotient",
      [](double x, double y, double alpha_exp) { return record_dict(holder::quotient(x, y, alpha_exp)); },
      py::arg("x"), py::arg("y"), py::arg("alpha_exp") = 0.5);
  m.def("piece_index", &holder::piece_index, py::arg("x"));

  m.def(
      "root",
      [](int n) {
        const holder::RootCertificate& c = holder::find_alpha(n);
        const holder::Interval a = c.alpha_enclosure();
        py::dict d;
        d["n"] = c.n;
        d["alpha"] = c.alpha;
        d["theta"] = c.theta;
        d["alpha_bracket"] = py::make_tuple(a.lo(), a.hi());
        d["theta_bracket"] = py::make_tuple(c.theta_bracket.lo(), c.theta_bracket.hi());
        d["residual"] = c.residual;
        return d;
      },
      py::arg("n"));

  m.def(
      "constants",
      [](int n) {
        const holder::ConstantsRow r = holder::c_n(n);
        py::dict d;
        d["n"] = r.n;
        d["alpha_n"] = r.alpha_n;
        d["alpha_np1"] = r.alpha_np1;
        d["delta"] = r.delta;
        d["i_closed"] = r.i_closed;
        d["i_quad"] = r.i_quad;
        d["g"] = r.g;
        d["f_factor"] = r.f_factor;
        d["c"] = r.c;
        return d;
      },
      py::arg("n"));

  m.def(
      "remap",
      [](double x, double y) {
        const holder::RemapResult r = holder::remap(x, y);
        return py::make_tuple(r.x, r.y, r.piece);
      },
      py::arg("x"), py::arg("y"));

  m.def(
      "critical_pair",
      [](int n, double x_cap) -> py::object {
        const auto cp = holder::critical_pair(n, x_cap);
        if (!cp) return py::none();
        py::dict d = record_dict(cp->record);
        d["residual"] = cp->residual;
        return d;
      },
      py::arg("n"), py::arg("x_cap") = holder::kDefaultXCap);

  m.def(
      "interval_sup",
      [](int n, int resolution) {
        const holder::PieceSup p = holder::interval_sup(n, resolution);
        return py::make_tuple(p.sup, record_dict(p.arg));
      },
      py::arg("n"), py::arg("resolution") = 512);

  m.def(
      "brute_grid_oracle",
      [](int n, int resolution, double x_cap) {
        const holder::PieceSup p = holder::brute_grid_oracle(n, resolution, x_cap);
        return py::make_tuple(p.sup, record_dict(p.arg));
      },
      py::arg("n"), py::arg("resolution"), py::arg("x_cap") = holder::kDefaultXCap);

  m.def(
      "global_sup_json",
      [](int n_max, double x_cap, int resolution, double alpha_exp) {
        py::gil_scoped_release release;
        return holder::supremum_json(holder::global_sup(n_max, x_cap, resolution, alpha_exp));
      },
      py::arg("n_max") = 200, py::arg("x_cap") = holder::kDefaultXCap, py::arg("resolution") = 512,
      py::arg("alpha_exp") = 0.5);

  m.def(
      "verify_json",
      [](int n_max, int resolution, const std::string& checklist, bool supremum) {
        holder::VerifyConfig cfg;
        cfg.n_max = n_max;
        cfg.resolution = resolution;
        cfg.checklist = checklist;
        cfg.supremum = supremum;
        py::gil_scoped_release release;
        return holder::render_json(holder::run_verification(cfg));
      },
      py::arg("n_max") = 200, py::arg("resolution") = 512, py::arg("checklist") = "", py::arg("supremum") = true);

  m.def("check_prop_inequalities", [](const std::string& path) { return check_list(holder::check_prop_inequalities(path)); },
        py::arg("path") = "");
  m.def("evaluate_term", [](const std::string& text) {
    const holder::Interval v = holder::evaluate_term(text);
    return py::make_tuple(v.lo(), v.hi());
  });
}
