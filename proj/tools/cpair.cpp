// cpair: command-line front end for Courant pair cohomology and deformations.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 input error.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cpair/catalog.hpp"
#include "cpair/cohomology.hpp"
#include "cpair/deformation.hpp"
#include "cpair/errors.hpp"
#include "cpair/io.hpp"

using nlohmann::json;
using namespace cpair;

namespace {

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

std::string tuple_text(const std::vector<std::string>& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? ", " : "") + labels[i];
  return out + ")";
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Loaded {
  CourantPair pair;
  std::optional<CPModule> module;
  std::optional<DeformationDocument> deformation;
};

Loaded load(const std::string& path) {
  const json doc = read_json_file(path);
  if (is_deformation_document(doc)) {
    DeformationDocument d = parse_deformation_document(doc);
    CourantPair pair = d.deformation.pair;
    return {std::move(pair), std::nullopt, std::move(d)};
  }
  PairDocument p = parse_pair_document(doc);
  return {std::move(p.pair), std::move(p.module), std::nullopt};
}

Deformation load_deformation(const std::string& path) {
  Loaded l = load(path);
  if (!l.deformation) throw InputError(path + " is not a deformation document");
  return std::move(l.deformation->deformation);
}

Bicomplex bicomplex_for(const Loaded& l) {
  return l.module ? Bicomplex(l.pair, *l.module) : Bicomplex::adjoint(l.pair);
}

json law_json(const LawResult& law) {
  return {{"law", law.law}, {"passed", law.passed}, {"witness", law.witness}};
}

json equation_json(const EquationResult& e) {
  return {{"order", e.order}, {"equation", e.equation}, {"passed", e.passed}, {"witness", e.witness}};
}

// Validates the structure underneath every deform subcommand; returns false after reporting a failure.
bool report_deformation(const Deformation& d, bool as_json, json* out) {
  const ValidationReport pair_report = validate_pair(d.pair);
  const DeformationReport report = validate_deformation(d);
  const bool ok = pair_report.ok() && report.ok();
  if (as_json) {
    json laws = json::array();
    for (const auto& l : pair_report.laws) laws.push_back(law_json(l));
    json eqs = json::array();
    for (const auto& e : report.equations) eqs.push_back(equation_json(e));
    (*out)["kind"] = "deformation";
    (*out)["order"] = d.order();
    (*out)["valid"] = ok;
    (*out)["laws"] = std::move(laws);
    (*out)["equations"] = std::move(eqs);
  } else if (!ok) {
    if (const auto* bad = pair_report.first_failure())
      std::cout << "FAIL " << bad->law << " at " << tuple_text(bad->witness) << "\n";
    else if (const auto* e = report.first_failure())
      std::cout << "FAIL " << e->equation << " at order " << e->order << " at " << tuple_text(e->witness) << "\n";
  }
  return ok;
}

int cmd_validate(const std::string& path, bool as_json) {
  Loaded l = load(path);
  if (l.deformation) {
    json out;
    const bool ok = report_deformation(l.deformation->deformation, as_json, &out);
    if (as_json) emit(out);
    else if (ok) std::cout << "PASS deformation of order " << l.deformation->deformation.order() << "\n";
    return ok ? kPass : kMathFailure;
  }
  ValidationReport report = validate_pair(l.pair);
  if (l.module) report.merge(validate_module(l.pair, *l.module));
  if (as_json) {
    json laws = json::array();
    for (const auto& law : report.laws) laws.push_back(law_json(law));
    emit({{"kind", l.module ? "pair+module" : "pair"}, {"valid", report.ok()}, {"laws", laws}});
  } else if (const auto* bad = report.first_failure()) {
    std::cout << "FAIL " << bad->law << " at " << tuple_text(bad->witness) << "\n";
  } else {
    std::cout << "PASS " << report.laws.size() << " laws\n";
  }
  return report.ok() ? kPass : kMathFailure;
}

json representative_json(const Vector& v, Column column, int n, const Bicomplex& bc) {
  switch (column) {
    case Column::Total: return export_total_cochain(TotalCochain::from_coordinates(bc, n, v), bc.pair());
    case Column::Leibniz: {
      Cochain c = Cochain::zero(bc, 0, n);
      c.coefficients() = v;
      return export_cochain(c, bc.pair());
    }
    case Column::Hochschild: {
      if (n == 0) {
        json out = json::array();
        for (const auto& s : v) out.push_back(to_string(s));
        return out;
      }
      Cochain c(n, 0, bc.a_dim(), bc.l_dim(), bc.m_dim());
      c.coefficients() = v;
      return export_cochain(c, bc.pair());
    }
  }
  return nullptr;
}

int cmd_cohomology(const std::string& path, int degree, const std::string& column_name, bool as_json,
                   bool representatives, bool force, const std::vector<std::string>& class_files) {
  const Column column = parse_column(column_name);
  Loaded l = load(path);
  const Bicomplex bc = bicomplex_for(l);
  CohomologyOptions options;
  options.representatives = representatives;
  options.force = force;
  if (force && degree > options.degree_cap) std::cerr << "warning: " << cost_estimate(column, degree, bc) << "\n";
  const CohomologyResult r = compute_cohomology(degree, bc, column, options);
  json out = {{"degree", degree},
              {"column", to_string(column)},
              {"cochain_dim", r.cochain_dim},
              {"cocycle_dim", r.cocycle_dim},
              {"incoming_rank", r.coboundary_dim},
              {"dim", r.dim}};
  if (representatives) {
    json reps = json::array();
    for (const auto& v : r.representatives) reps.push_back(representative_json(v, column, degree, bc));
    out["representatives"] = std::move(reps);
  }
  if (!class_files.empty()) {
    if (column != Column::Total || degree != 2) throw InputError("--classes applies to --degree 2 --column total");
    std::vector<TotalCochain> cocycles;
    json items = json::array();
    for (const auto& file : class_files) {
      const Deformation d = load_deformation(file);
      if (!(structure_alpha(d.pair) == structure_alpha(bc.pair())) ||
          !(structure_mu(d.pair) == structure_mu(bc.pair())) ||
          !(structure_lambda(d.pair) == structure_lambda(bc.pair())))
        throw InputError(file + " deforms a different pair");
      TotalCochain c = infinitesimal_cocycle(d);
      items.push_back({{"file", file}, {"cocycle", is_cocycle(c, bc)}, {"coboundary", is_coboundary(c, bc)}});
      cocycles.push_back(std::move(c));
    }
    const std::size_t rank = class_rank(cocycles, bc);
    out["classes"] = {{"items", items}, {"rank", rank}, {"independent", rank == cocycles.size()}};
  }
  if (as_json) {
    emit(out);
    return kPass;
  }
  std::cout << "degree " << degree << " (" << to_string(column) << ")\n"
            << "dim C^" << degree << " = " << r.cochain_dim << "\n"
            << "dim ker = " << r.cocycle_dim << "\n"
            << "rank of incoming differential = " << r.coboundary_dim << "\n"
            << "dim H^" << degree << " = " << r.dim << "\n";
  if (representatives) {
    std::size_t i = 0;
    for (const auto& rep : out["representatives"]) std::cout << "class " << ++i << ": " << rep.dump() << "\n";
  }
  if (out.contains("classes")) {
    for (const auto& item : out["classes"]["items"])
      std::cout << item["file"].get<std::string>() << ": cocycle " << item["cocycle"] << ", coboundary "
                << item["coboundary"] << "\n";
    std::cout << "rank of classes = " << out["classes"]["rank"] << "\n";
  }
  return kPass;
}

json delta_components(const TotalCochain& c, const Bicomplex& bc) {
  const TotalCochain d = total_delta(c, bc);
  json out = json::object();
  for (const auto& part : d.components())
    out[std::to_string(part.p()) + "," + std::to_string(part.q())] = part.is_zero();
  return out;
}

int cmd_infinitesimal(const Deformation& d, bool as_json) {
  const Bicomplex bc = Bicomplex::adjoint(d.pair);
  const auto [n, first] = n_infinitesimal(d);
  const TotalCochain inf = infinitesimal(d);
  const TotalCochain cocycle = infinitesimal_cocycle(d);
  const bool closed = is_cocycle(cocycle, bc);
  const bool exact = is_coboundary(cocycle, bc);
  json out = {{"order", d.order()},
              {"infinitesimal", export_total_cochain(inf, d.pair)},
              {"cocycle_form", export_total_cochain(cocycle, d.pair)},
              {"is_cocycle", closed},
              {"is_coboundary", exact},
              {"delta_components_zero", delta_components(cocycle, bc)},
              {"n", n},
              {"n_infinitesimal", export_total_cochain(first, d.pair)}};
  if (as_json) emit(out);
  else
    std::cout << "infinitesimal: " << out["infinitesimal"].dump() << "\n"
              << "first nonzero order: " << n << "\n"
              << "cocycle: " << (closed ? "true" : "false") << "\n"
              << "coboundary: " << (exact ? "true" : "false") << "\n";
  return closed ? kPass : kMathFailure;
}

json obstruction_json(const Deformation& d, const Obstruction& theta, const Bicomplex& bc) {
  const ObstructionCheck check = check_obstruction(theta, bc);
  const TotalCochain total = theta.total();
  const bool cocycle = is_cocycle(total, bc);
  const Cochain half = half_bracket_sum(d);
  return {{"order", theta.order},
          {"theta", export_total_cochain(total, d.pair)},
          {"zero", total.is_zero()},
          {"cocycle", cocycle},
          {"identities",
           {{"dH_thetaA", check.hochschild_closed},
            {"dH_theta1_minus_dL_thetaA", check.mixed_a},
            {"dH_theta2_plus_dL_theta1", check.mixed_b},
            {"dv_thetaL_minus_dL_theta2", check.mixed_c},
            {"dL_thetaL", check.leibniz_closed}}},
          {"class_vanishes", is_coboundary(total, bc)},
          {"thetaA_equals_half_bracket_sum", half == theta.theta_a},
          {"thetaA_equals_minus_half_bracket_sum", half == -theta.theta_a}};
}

int cmd_obstruction(const Deformation& d, bool as_json) {
  const Bicomplex bc = Bicomplex::adjoint(d.pair);
  const json out = obstruction_json(d, obstruction(d), bc);
  if (as_json) {
    emit(out);
  } else {
    std::cout << "obstruction at order " << out["order"] << "\n";
    for (const auto& part : out["theta"]["components"])
      std::cout << "  theta(" << part["p"] << "," << part["q"] << "): " << part["entries"].dump() << "\n";
    std::cout << "cocycle: " << (out["cocycle"].get<bool>() ? "true" : "false") << "\n"
              << "class vanishes: " << (out["class_vanishes"].get<bool>() ? "true" : "false") << "\n";
  }
  return out["cocycle"].get<bool>() ? kPass : kMathFailure;
}

int cmd_extend(const Deformation& start, int target, bool as_json) {
  if (target < start.order()) throw InputError("--to must be at least the current order");
  const Bicomplex bc = Bicomplex::adjoint(start.pair);
  Deformation d = start;
  json steps = json::array();
  std::optional<json> blocking;
  while (d.order() < target) {
    const Obstruction theta = obstruction(d);
    json step = obstruction_json(d, theta, bc);
    auto next = extend(d);
    if (!next) {
      blocking = {{"order", theta.order}, {"class_representative", export_total_cochain(theta.total(), d.pair)}};
      step["extended"] = false;
      steps.push_back(std::move(step));
      break;
    }
    d = std::move(*next);
    const int n = d.order();
    step["extended"] = true;
    step["coefficient"] = export_total_cochain(TotalCochain({d.alphas[n], d.mus[n], d.lambdas[n]}), d.pair);
    step["coefficient_zero"] = d.alphas[n].is_zero() && d.mus[n].is_zero() && d.lambdas[n].is_zero();
    step["valid"] = validate_deformation(d).ok();
    steps.push_back(std::move(step));
  }
  const bool complete = d.order() == target;
  json out = {{"target", target}, {"reached", d.order()}, {"complete", complete}, {"steps", steps},
              {"deformation", export_deformation(d)}};
  if (blocking) out["blocking"] = *blocking;
  if (as_json) {
    emit(out);
  } else {
    for (const auto& s : steps)
      std::cout << "order " << s["order"] << ": " << (s["extended"].get<bool>() ? "extended" : "obstructed")
                << (s.contains("coefficient_zero") && s["coefficient_zero"].get<bool>() ? " (zero top coefficients)" : "")
                << "\n";
    if (blocking)
      std::cout << "stopped at order " << (*blocking)["order"]
                << "; obstruction class representative: " << (*blocking)["class_representative"].dump() << "\n";
    else
      std::cout << "reached order " << d.order() << "\n";
  }
  return complete ? kPass : kMathFailure;
}

int cmd_equivalent(const Deformation& d1, const std::string& other, bool as_json) {
  const Deformation d2 = load_deformation(other);
  json tmp;
  if (!report_deformation(d2, false, &tmp)) throw InvalidDeformationError(other + " does not validate");
  const auto eq = equivalent_infinitesimals_differ_by_coboundary(d1, d2);
  json out = {{"order", 1}, {"equivalent_at_order_1", eq.has_value()}};
  if (eq) {
    out["phi1"] = export_cochain(eq->phi1, d1.pair);
    out["psi1"] = export_cochain(eq->psi1, d1.pair);
    out["identities_hold"] = first_order_identities_hold(d1, d2, eq->phi1, eq->psi1);
  }
  if (as_json) emit(out);
  else std::cout << (eq ? "equivalent at order 1" : "non-equivalent at order 1") << "\n";
  return kPass;
}

int cmd_deform(const std::string& path, const std::string& sub, int to, const std::string& other, bool as_json) {
  Loaded l = load(path);
  if (!l.deformation) throw InputError(path + " is not a deformation document");
  const Deformation& d = l.deformation->deformation;
  json report;
  const bool ok = report_deformation(d, as_json, &report);
  if (sub == "validate") {
    if (as_json) emit(report);
    else if (ok) std::cout << "PASS deformation of order " << d.order() << "\n";
    return ok ? kPass : kMathFailure;
  }
  if (!ok) {
    if (as_json) emit(report);
    std::cerr << "refused: the deformation does not satisfy its equations\n";
    return kMathFailure;
  }
  if (sub == "infinitesimal") return cmd_infinitesimal(d, as_json);
  if (sub == "obstruction") return cmd_obstruction(d, as_json);
  if (sub == "extend") return cmd_extend(d, to, as_json);
  return cmd_equivalent(d, other, as_json);
}

const Deformation& featured(const CatalogEntry& e, const std::string& which) {
  for (std::size_t i = 0; i < e.featured_deformations.size(); ++i)
    if (e.featured_deformations[i].first == which || std::to_string(i + 1) == which)
      return e.featured_deformations[i].second;
  throw InputError("catalog entry " + e.name + " has no featured deformation \"" + which + "\"");
}

int cmd_catalog_export(const std::string& name, const std::string& deformation, bool with_module) {
  const CatalogEntry& e = catalog_entry(name);
  if (!deformation.empty()) {
    emit(export_deformation(featured(e, deformation)));
    return kPass;
  }
  const CPModule module = adjoint_module(e.pair);
  json doc = export_pair(e.pair, with_module ? &module : nullptr);
  doc["name"] = e.name;
  doc["notes"] = e.notes;
  emit(doc);
  return kPass;
}

int cmd_catalog_list(bool as_json) {
  json out = json::array();
  for (const auto& name : catalog_names()) {
    const CatalogEntry& e = catalog_entry(name);
    json defs = json::array();
    for (const auto& [label, d] : e.featured_deformations) defs.push_back(label);
    json cochains = json::array();
    for (const auto& [label, c] : e.featured_cochains) cochains.push_back(label);
    out.push_back({{"name", name},
                   {"dim_A", e.pair.a_dim()},
                   {"dim_L", e.pair.l_dim()},
                   {"featured_cochains", cochains},
                   {"featured_deformations", defs}});
  }
  if (as_json) {
    emit(out);
    return kPass;
  }
  for (const auto& item : out) {
    std::cout << item["name"].get<std::string>() << " (dim A = " << item["dim_A"] << ", dim L = " << item["dim_L"]
              << ")\n";
    std::size_t i = 0;
    for (const auto& d : item["featured_deformations"]) std::cout << "  " << ++i << ". " << d.get<std::string>() << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology and deformations of Courant pairs over Q"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file;
  auto* validate = app.add_subcommand("validate", "check the laws of a pair, module or deformation");
  validate->add_option("FILE", file, "pair or deformation document")->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  int degree = 0;
  std::string column = "total";
  bool reps = false;
  bool force = false;
  std::vector<std::string> classes;
  auto* cohomology = app.add_subcommand("cohomology", "dimension of a cohomology group");
  cohomology->add_option("FILE", file, "pair or deformation document")->required();
  cohomology->add_option("--degree", degree, "degree n")->required()->check(CLI::NonNegativeNumber);
  cohomology->add_option("--column", column, "total, leibniz or hochschild")
      ->check(CLI::IsMember({"total", "leibniz", "hochschild"}));
  cohomology->add_flag("--representatives", reps, "list class representatives");
  cohomology->add_flag("--force", force, "ignore the degree cap");
  cohomology->add_option("--classes", classes, "deformation documents whose infinitesimal classes are compared");
  cohomology->add_flag("--json", as_json, "machine-readable output");

  auto* deform = app.add_subcommand("deform", "deformation commands");
  deform->add_option("FILE", file, "deformation document")->required();
  deform->add_flag("--json", as_json, "machine-readable output");
  deform->require_subcommand(1);
  int to = 0;
  std::string other;
  auto* d_validate = deform->add_subcommand("validate", "check the deformation equations order by order");
  auto* d_inf = deform->add_subcommand("infinitesimal", "first-order coefficient and its class");
  auto* d_obs = deform->add_subcommand("obstruction", "obstruction cochain of the next order");
  auto* d_ext = deform->add_subcommand("extend", "extend order by order");
  d_ext->add_option("--to", to, "target order")->required()->check(CLI::NonNegativeNumber);
  auto* d_eq = deform->add_subcommand("equivalent", "compare with another deformation at order 1");
  d_eq->add_option("OTHER", other, "second deformation document")->required();
  for (auto* s : {d_validate, d_inf, d_obs, d_ext, d_eq}) s->add_flag("--json", as_json, "machine-readable output");

  auto* catalog = app.add_subcommand("catalog", "built-in examples");
  catalog->require_subcommand(1);
  auto* c_list = catalog->add_subcommand("list", "list catalog entries");
  c_list->add_flag("--json", as_json, "machine-readable output");
  std::string name;
  std::string deformation;
  bool with_module = false;
  auto* c_export = catalog->add_subcommand("export", "print an entry as a document");
  c_export->add_option("NAME", name, "catalog entry")->required();
  c_export->add_option("--deformation", deformation, "export a featured deformation (name or 1-based index)");
  c_export->add_flag("--module", with_module, "include the adjoint module explicitly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(file, as_json);
    if (*cohomology) return cmd_cohomology(file, degree, column, as_json, reps, force, classes);
    if (*deform) {
      std::string sub = d_validate->parsed() ? "validate"
                        : d_inf->parsed()    ? "infinitesimal"
                        : d_obs->parsed()    ? "obstruction"
                        : d_ext->parsed()    ? "extend"
                                             : "equivalent";
      return cmd_deform(file, sub, to, other, as_json);
    }
    if (*c_list) return cmd_catalog_list(as_json);
    return cmd_catalog_export(name, deformation, with_module);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DegreeCapError& e) {
    std::cerr << "refused: " << e.what() << "; pass --force or set CPAIR_DEGREE_CAP\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}
