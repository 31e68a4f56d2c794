// Python bindings. Structured data crosses the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpair/catalog.hpp"
#include "cpair/cohomology.hpp"
#include "cpair/errors.hpp"
#include "cpair/io.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

cpair::PairDocument pair_from(const std::string& text) {
  return cpair::parse_pair_document(cpair::parse_json_text(text));
}

cpair::Deformation deformation_from(const std::string& text) {
  return cpair::parse_deformation_document(cpair::parse_json_text(text)).deformation;
}

std::string validate(const std::string& text) {
  const json doc = cpair::parse_json_text(text);
  json out = json::object();
  if (cpair::is_deformation_document(doc)) {
    const auto report = cpair::validate_deformation(cpair::parse_deformation_document(doc).deformation);
    out["valid"] = report.ok();
    if (const auto* f = report.first_failure()) out["failure"] = {{"order", f->order}, {"equation", f->equation}, {"witness", f->witness}};
    return out.dump();
  }
  const cpair::PairDocument pd = cpair::parse_pair_document(doc);
  cpair::ValidationReport report = cpair::validate_pair(pd.pair);
  if (pd.module) report.merge(cpair::validate_module(pd.pair, *pd.module));
  out["valid"] = report.ok();
  if (const auto* f = report.first_failure()) out["failure"] = {{"law", f->law}, {"witness", f->witness}};
  return out.dump();
}

std::string cohomology(const std::string& text, int degree, const std::string& column) {
  const cpair::Bicomplex bc = cpair::Bicomplex::adjoint(pair_from(text).pair);
  const cpair::CohomologyResult r = cpair::compute_cohomology(degree, bc, cpair::parse_column(column));
  return json{{"degree", r.degree},
              {"column", cpair::to_string(r.column)},
              {"cochain_dim", r.cochain_dim},
              {"cocycle_dim", r.cocycle_dim},
              {"coboundary_dim", r.coboundary_dim},
              {"dim", r.dim}}
      .dump();
}

std::string infinitesimal(const std::string& text) {
  const cpair::Deformation d = deformation_from(text);
  const cpair::TotalCochain inf = cpair::infinitesimal(d);
  const cpair::Bicomplex bc = cpair::Bicomplex::adjoint(d.pair);
  return json{{"infinitesimal", cpair::export_total_cochain(inf, d.pair)},
              {"is_cocycle", cpair::is_cocycle(cpair::infinitesimal_cocycle(d), bc)},
              {"is_coboundary", cpair::is_coboundary(cpair::infinitesimal_cocycle(d), bc)}}
      .dump();
}

std::string obstruction(const std::string& text) {
  const cpair::Deformation d = deformation_from(text);
  const cpair::Obstruction theta = cpair::obstruction(d);
  const cpair::Bicomplex bc = cpair::Bicomplex::adjoint(d.pair);
  return json{{"theta", cpair::export_total_cochain(theta.total(), d.pair)},
              {"zero", theta.total().is_zero()},
              {"cocycle", cpair::is_cocycle(theta.total(), bc)},
              {"class_vanishes", cpair::is_coboundary(theta.total(), bc)}}
      .dump();
}

std::string extend(const std::string& text, int target) {
  const cpair::ExtensionResult r = cpair::extend_to(deformation_from(text), target);
  return json{{"complete", r.complete},
              {"reached", r.deformation.order()},
              {"deformation", cpair::export_deformation(r.deformation)}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_cpair, m) {
  m.doc() = "Exact cohomology and deformations of Courant pairs";

  // Translators run newest first, so the base class is registered first.
  const auto error = py::register_exception<cpair::Error>(m, "Error");
  py::register_exception<cpair::InputError>(m, "InputError", error);
  py::register_exception<cpair::InvalidDeformationError>(m, "InvalidDeformationError", error);
  py::register_exception<cpair::DegreeCapError>(m, "DegreeCapError", error);

  m.def("catalog_names", &cpair::catalog_names);
  m.def("catalog_export", [](const std::string& name) { return cpair::export_pair(cpair::catalog_entry(name).pair).dump(); });
  m.def("catalog_deformation", [](const std::string& name, std::size_t index) {
    const auto& defs = cpair::catalog_entry(name).featured_deformations;
    if (index < 1 || index > defs.size()) throw cpair::InputError("no featured deformation " + std::to_string(index));
    return cpair::export_deformation(defs[index - 1].second).dump();
  });
  m.def("validate", &validate, py::arg("document"));
  m.def("cohomology", &cohomology, py::arg("document"), py::arg("degree"), py::arg("column") = "total");
  m.def("infinitesimal", &infinitesimal, py::arg("document"));
  m.def("obstruction", &obstruction, py::arg("document"));
  m.def("extend", &extend, py::arg("document"), py::arg("to"));
}
