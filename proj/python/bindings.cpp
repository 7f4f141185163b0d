#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3deg/classify.hpp"
#include "k3deg/density.hpp"
#include "k3deg/error.hpp"
#include "k3deg/lattice.hpp"
#include "k3deg/moduli.hpp"
#include "k3deg/oracle.hpp"
#include "k3deg/parser.hpp"
#include "k3deg/report.hpp"

namespace py = pybind11;
using namespace k3deg;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict lattice_dict(const Lattice& l) {
  py::dict d;
  d["name"] = l.name;
  d["rank"] = l.rank();
  d["gram"] = l.gram;
  d["det"] = py::int_(py::str(determinant(l.gram).get_str()));
  d["signature"] = signature(l.gram);
  d["even"] = is_even(l.gram);
  return d;
}

py::dict analyze_text_py(const std::string& text) {
  nlohmann::json j = analyze_text(text).report;
  return to_python(j);
}

std::string density_csv(const std::string& text) {
  return emit_csv(analyze_text(text).v_native.normalized());
}

std::string density_svg(const std::string& text) {
  return emit_svg(analyze_text(text).v_native.normalized());
}

py::list strata(const std::string& which) {
  std::vector<Stratum> s;
  if (which == "divisors") s = enumerate_divisors();
  else if (which == "codim2") s = enumerate_codim2();
  else throw py::value_error("which must be 'divisors' or 'codim2'");
  py::list out;
  for (const auto& x : s) {
    py::dict d;
    d["label"] = x.label;
    d["kind"] = x.kind;
    d["codim"] = x.codim;
    d["nonnormal"] = x.is_nonnormal_locus;
    d["params"] = x.params;
    out.append(d);
  }
  return out;
}

py::dict oracle_py(const std::string& text, std::vector<double> ts, double tol) {
  OracleReport r = oracle_compare(parse_family(text), std::move(ts), tol, false);
  py::dict d;
  d["skipped"] = r.skipped;
  d["notice"] = r.notice;
  py::list samples;
  for (const auto& s : r.samples) {
    py::dict x;
    x["t"] = s.t;
    x["max_deviation"] = s.max_deviation;
    x["positions"] = s.positions;
    samples.append(x);
  }
  d["samples"] = samples;
  py::list clusters;
  for (const auto& c : r.clusters) {
    py::dict x;
    x["position"] = to_string(c.position);
    x["exact"] = c.exact;
    x["empirical"] = c.empirical;
    clusters.append(x);
  }
  d["clusters"] = clusters;
  d["trend_ok"] = r.trend_ok;
  d["fitted_c"] = r.fitted_c;
  d["tolerance"] = r.tolerance;
  d["failure"] = r.failure;
  return d;
}

}  // namespace

PYBIND11_MODULE(_k3deg, m) {
  static py::exception<Error> error_type(m, "K3DegError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("code") = std::string(error_name(e.code()));
      exc.attr("exit_code") = exit_code(e.code());
      exc.attr("line") = e.line();
      exc.attr("column") = e.column();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def("analyze", &analyze_text_py, py::arg("text"), "Full analysis; returns the JSON report as a dict.");
  m.def("canonical", [](const std::string& text) { return canonical_text(parse_family(text)); },
        py::arg("text"));
  m.def("density_csv", &density_csv, py::arg("text"));
  m.def("density_svg", &density_svg, py::arg("text"));
  m.def("stable_type_charges", [](const std::string& label) { return parse_stable_type(label).charges(); },
        py::arg("label"));
  m.def("root_lattice", [](char family, int n) { return lattice_dict(root_lattice(family, n)); },
        py::arg("family"), py::arg("n"));
  m.def("lambda_abe", [](const std::string& label) { return lattice_dict(lambda_abe(parse_stable_type(label))); },
        py::arg("stable_type"));
  m.def("lambda_seg", [] { return lattice_dict(lambda_seg()); });
  m.def("count_vectors", [](char family, int n, long norm) { return count_vectors(root_lattice(family, n), norm); },
        py::arg("family"), py::arg("n"), py::arg("norm") = 2);
  m.def("wps_weights", &wps_weights, py::arg("family"), py::arg("n"));
  m.def("gm_weights", &gm_weights);
  m.def("strata", &strata, py::arg("which") = "divisors");
  m.def("nonnormal_count", [] { return nonnormal_count(enumerate_codim2()); });
  m.def("normalization_preimage_count", [] { return normalization_preimage_count(enumerate_codim2()); });
  m.def("chamber_count", &chamber_count);
  m.def("oracle", &oracle_py, py::arg("text"), py::arg("t") = std::vector<double>{1e-3, 1e-5, 1e-7},
        py::arg("tol") = 0.2);
}
