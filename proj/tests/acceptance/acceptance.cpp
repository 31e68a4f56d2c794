// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails.

#include <unistd.h>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "cpair/catalog.hpp"
#include "cpair/cohomology.hpp"
#include "cpair/deformation.hpp"
#include "cpair/io.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace cpair;
using namespace testing_support;
using nlohmann::json;

namespace {

/// Counts checks and keeps the first failure.
struct Criterion {
  int checks = 0;
  int failures = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

bool report(int number, const std::string& title, const Criterion& c, const std::string& extra = {}) {
  std::cout << "criterion " << number << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << title << " [" << c.checks
            << " checks";
  if (!c.ok()) std::cout << ", " << c.failures << " failed; first: " << c.first_failure;
  std::cout << "]";
  if (!extra.empty()) std::cout << " " << extra;
  std::cout << std::endl;
  return c.ok();
}

Scalar sign(int e) { return e % 2 == 0 ? 1 : -1; }

std::string where(const std::string& name, const std::string& what) { return name + ": " + what; }

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = catalog_names();
  return n;
}

// 1. complex property suite
Criterion complex_suite() {
  Criterion c;
  std::mt19937_64 rng(101);
  for (const auto& name : names()) {
    const Bicomplex bc = Bicomplex::adjoint(catalog_entry(name).pair);
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; p + q <= 2; ++q)
        for (int trial = 0; trial < 100; ++trial) {
          const Cochain f = random_cochain(bc, p, q, rng);
          const std::string at = " on C^{" + std::to_string(p) + "," + std::to_string(q) + "}";
          c.expect(leibniz_delta(leibniz_delta(f, bc), bc).is_zero(), where(name, "dL dL != 0" + at));
          if (p >= 1) {
            c.expect(hochschild_delta(hochschild_delta(f, bc), bc).is_zero(), where(name, "dH dH != 0" + at));
            c.expect(hochschild_delta(leibniz_delta(f, bc), bc) == leibniz_delta(hochschild_delta(f, bc), bc),
                     where(name, "dH dL != dL dH" + at));
          } else {
            c.expect(hochschild_delta(vertical_delta(f, bc), bc).is_zero(), where(name, "dH dv != 0" + at));
            c.expect(vertical_delta(leibniz_delta(f, bc), bc) == leibniz_delta(vertical_delta(f, bc), bc),
                     where(name, "dv dL != dL dv" + at));
          }
        }
    for (int n = 0; n <= 2; ++n)
      for (int trial = 0; trial < 100; ++trial)
        c.expect(total_delta(total_delta(random_total(bc, n, rng), bc), bc).is_zero(),
                 where(name, "dtot^2 != 0 in degree " + std::to_string(n)));
  }
  return c;
}

// 2. DGLA suite
Criterion dgla_suite() {
  Criterion c;
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> arity(1, 4);
  std::vector<std::string> algebras;
  for (const auto& name : names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    const Bicomplex bc = Bicomplex::adjoint(pair);
    const Cochain alpha = structure_alpha(pair);
    for (int p = 1; p <= 4; ++p)
      for (int trial = 0; trial < 100; ++trial) {
        const Cochain f = random_hochschild(pair, p, rng);
        c.expect(hochschild_delta(f, bc) == sign(p - 1) * gerstenhaber_bracket(alpha, f),
                 where(name, "dH f != (-1)^|f| [alpha, f] for |f| = " + std::to_string(p - 1)));
      }
    for (int trial = 0; trial < 100; ++trial) {
      const Cochain x = random_hochschild(pair, arity(rng), rng);
      const Cochain y = random_hochschild(pair, arity(rng), rng);
      const Cochain z = random_hochschild(pair, 1 + trial % 2, rng);
      const int dx = x.p() - 1, dy = y.p() - 1, dz = z.p() - 1;
      c.expect(gerstenhaber_bracket(x, y) == -(sign(dx * dy) * gerstenhaber_bracket(y, x)),
               where(name, "graded antisymmetry"));
      const Cochain jacobi = sign(dx * dz) * gerstenhaber_bracket(x, gerstenhaber_bracket(y, z)) +
                             sign(dy * dx) * gerstenhaber_bracket(y, gerstenhaber_bracket(z, x)) +
                             sign(dz * dy) * gerstenhaber_bracket(z, gerstenhaber_bracket(x, y));
      c.expect(jacobi.is_zero(), where(name, "graded Jacobi"));
    }
  }
  return c;
}

// 3. equivariance of the Hochschild differential
Criterion equivariance_suite() {
  Criterion c;
  std::mt19937_64 rng(303);
  for (const auto& name : names()) {
    const Bicomplex bc = Bicomplex::adjoint(catalog_entry(name).pair);
    for (int trial = 0; trial < 100; ++trial) {
      const int p = 1 + trial % 3;
      const Cochain f = random_cochain(bc, p, 0, rng);
      const Cochain df = hochschild_delta(f, bc);
      for (std::size_t x = 0; x < bc.l_dim(); ++x)
        c.expect(hochschild_delta(module_action(x, f, bc), bc) == module_action(x, df, bc),
                 where(name, "dH [x, f] != [x, dH f] for x = " + bc.pair().leibniz.labels[x]));
    }
  }
  return c;
}

TotalCochain as_total(const Cochain& lambda_part, const Bicomplex& bc) {
  TotalCochain t = TotalCochain::zero(bc, 2);
  t.component(0) = lambda_part;
  return t;
}

// 4. Heisenberg suite
Criterion heisenberg_suite(std::string& extra) {
  Criterion c;
  const CatalogEntry& h = heisenberg();
  const Bicomplex bc = Bicomplex::adjoint(h.pair);
  std::vector<TotalCochain> classes;
  for (const auto& [name, phi] : h.featured_cochains) {
    c.expect(leibniz_delta(phi, bc).is_zero(), name + ": dL phi != 0");
    c.expect(vertical_delta(phi, bc).is_zero(), name + ": dv phi != 0");
    const TotalCochain t = as_total(phi, bc);
    c.expect(is_cocycle(t, bc), name + ": (0,0,phi) is not a cocycle");
    c.expect(!is_coboundary(t, bc), name + ": (0,0,phi) is a coboundary");
    classes.push_back(t);
  }
  c.expect(classes.size() == 3, "expected three featured cochains");
  const std::size_t rank = class_rank(classes, bc);
  c.expect(rank == 3, "classes of phi1, phi2, phi3 are dependent");
  const std::size_t hl2 = cohomology_dim(2, bc);
  c.expect(hl2 >= 3, "dim HL^2 < 3");
  const auto& defs = h.featured_deformations;
  for (const auto& [name, d] : defs) c.expect(validate_deformation(d).ok(), name + " does not validate");
  for (std::size_t i = 0; i < defs.size(); ++i)
    for (std::size_t j = i + 1; j < defs.size(); ++j)
      c.expect(!equivalent_infinitesimals_differ_by_coboundary(defs[i].second, defs[j].second),
               defs[i].first + " and " + defs[j].first + " are equivalent at order 1");
  extra = "(dim HL^2 = " + std::to_string(hl2) + ", rank of phi classes = " + std::to_string(rank) + ")";
  return c;
}

/// Featured deformations, their extensions up to order 3 and extended random
/// order-1 deformations sampled from 2-cocycles.
std::vector<std::pair<std::string, Deformation>> obstruction_fixtures() {
  std::vector<std::pair<std::string, Deformation>> out;
  std::mt19937_64 rng(505);
  for (const auto& name : names()) {
    const CatalogEntry& e = catalog_entry(name);
    for (const auto& [label, d] : e.featured_deformations) {
      const ExtensionResult r = extend_to(d, 3);
      for (int k = 1; k <= r.deformation.order(); ++k)
        out.emplace_back(name + " " + label + " order " + std::to_string(k), r.deformation.truncated(k));
    }
    const CocycleSampler sampler(e.pair);
    for (int trial = 0; trial < 6; ++trial) {
      const ExtensionResult r = extend_to(sampler.deformation(rng), 1 + trial % 3);
      for (int k = 1; k <= r.deformation.order(); ++k)
        out.emplace_back(name + " random " + std::to_string(trial) + " order " + std::to_string(k),
                         r.deformation.truncated(k));
    }
  }
  return out;
}

// 5. obstruction theorem
Criterion obstruction_suite(const std::vector<std::pair<std::string, Deformation>>& fixtures, std::string& extra) {
  Criterion c;
  int nonzero = 0;
  for (const auto& [label, d] : fixtures) {
    c.expect(validate_deformation(d).ok(), label + " does not validate");
    const Bicomplex bc = Bicomplex::adjoint(d.pair);
    const Obstruction theta = obstruction(d);
    if (!theta.total().is_zero()) ++nonzero;
    const ObstructionCheck k = check_obstruction(theta, bc);
    c.expect(is_cocycle(theta.total(), bc), label + ": theta is not a 3-cocycle");
    c.expect(k.hochschild_closed, label + ": dH thetaA != 0");
    c.expect(k.mixed_a, label + ": dH theta1 - dL thetaA != 0");
    c.expect(k.mixed_b, label + ": dH theta2 + dL theta1 != 0");
    c.expect(k.mixed_c, label + ": dv thetaL - dL theta2 != 0");
    c.expect(k.leibniz_closed, label + ": dL thetaL != 0");
  }
  extra = "(" + std::to_string(fixtures.size()) + " deformations, " + std::to_string(nonzero) + " with nonzero theta)";
  return c;
}

// 6. extension theorem
Criterion extension_suite(std::string& extra) {
  Criterion c;
  std::vector<std::pair<std::string, Deformation>> starts;
  for (const auto& [label, d] : dual_numbers_line().featured_deformations) starts.emplace_back(label, d);
  for (const auto& [label, d] : heisenberg().featured_deformations) starts.emplace_back(label, d);
  for (const auto& [label, start] : starts) {
    Deformation d = start;
    while (d.order() < 4) {
      const Obstruction theta = obstruction(d);
      c.expect(theta.theta_a == half_bracket_sum(d),
               label + ": thetaA != 1/2 sum [alpha_i, alpha_j] at order " + std::to_string(d.order() + 1));
      auto next = extend(d);
      c.expect(next.has_value(), label + ": no extension to order " + std::to_string(d.order() + 1));
      if (!next) break;
      d = std::move(*next);
      c.expect(validate_deformation(d).ok(), label + ": order " + std::to_string(d.order()) + " does not validate");
    }
    c.expect(d.order() == 4, label + " did not reach order 4");
  }
  // The general relation on deformations with nonvanishing alpha terms, for reference.
  std::mt19937_64 rng(606);
  int same = 0, opposite = 0, total = 0;
  for (const auto& name : names()) {
    const CocycleSampler sampler(catalog_entry(name).pair);
    for (int trial = 0; trial < 5; ++trial) {
      const ExtensionResult r = extend_to(sampler.deformation(rng), 2);
      const Cochain half = half_bracket_sum(r.deformation);
      const Cochain theta_a = obstruction(r.deformation).theta_a;
      if (theta_a.is_zero()) continue;
      ++total;
      same += theta_a == half;
      opposite += theta_a == -half;
    }
  }
  extra = "(random deformations with thetaA != 0: " + std::to_string(total) + "; thetaA = +1/2 sum on " +
          std::to_string(same) + ", thetaA = -1/2 sum on " + std::to_string(opposite) + ")";
  return c;
}

// 7. equivalence theorem
struct EquivalenceOutcome {
  Criterion literal;
  Criterion twisted;
  Criterion componentwise;
};

EquivalenceOutcome equivalence_suite() {
  EquivalenceOutcome out;
  std::mt19937_64 rng(707);
  for (const auto& name : names()) {
    const CatalogEntry& e = catalog_entry(name);
    const Bicomplex bc = Bicomplex::adjoint(e.pair);
    for (const auto& [label, d] : e.featured_deformations)
      for (int trial = 0; trial < 50; ++trial) {
        const Equivalence eq = random_equivalence(e.pair, 2, rng);
        const Deformation moved = apply_equivalence(d, eq);
        const TotalCochain pre({eq.phis[0], eq.psis[0]});
        const TotalCochain diff = infinitesimal(moved) - infinitesimal(d);
        const std::string at = name + " " + label + " trial " + std::to_string(trial);
        out.literal.expect(diff == total_delta(pre, bc), at + ": inf difference != dtot(phi1, psi1)");
        out.twisted.expect(structure_twist(diff) == total_delta(structure_twist(pre), bc),
                           at + ": twisted difference != dtot(phi1, -psi1)");
        out.componentwise.expect(first_order_identities_hold(d, moved, eq.phis[0], eq.psis[0]),
                                 at + ": componentwise first-order identities fail");
        out.componentwise.expect(validate_deformation(moved).ok(), at + ": transformed deformation invalid");
      }
  }
  return out;
}

// 8. oracle equivalence for the two axes
Matrix dense_of(const oracle::Dense& d, std::size_t cols) {
  Matrix m(d.size(), cols);
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t k = 0; k < cols; ++k) m(r, k) = d[r][k];
  return m;
}

/// Block of the total differential from component p_in of Tot^n to component p_out of Tot^{n+1}.
Matrix total_block(int n, int p_in, int p_out, const Bicomplex& bc) {
  const SparseMatrix d = total_delta_sparse(n, bc);
  const GradedBasisIndex src = graded_index(n, bc), dst = graded_index(n + 1, bc);
  Matrix m(dst.size(p_out), src.size(p_in));
  for (std::size_t col = 0; col < m.cols(); ++col)
    for (const auto& [row, v] : d.columns[src.offset(p_in) + col])
      if (row >= dst.offset(p_out) && row < dst.offset(p_out) + m.rows()) m(row - dst.offset(p_out), col) = v;
  return m;
}

Criterion oracle_suite(std::string& extra) {
  Criterion c;
  std::ostringstream dims;
  for (const auto& name : names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    const Bicomplex bc = Bicomplex::adjoint(pair);
    std::vector<oracle::Dense> hoch, leib;
    for (int n = 0; n <= 3; ++n) {
      hoch.push_back(oracle::hochschild_matrix(pair, bc.module(), n));
      leib.push_back(oracle::leibniz_matrix(pair, bc.module(), n));
      const std::string deg = " degree " + std::to_string(n);
      const Matrix ho = dense_of(hoch.back(), column_space_dim(Column::Hochschild, n, bc));
      const Matrix lo = dense_of(leib.back(), column_space_dim(Column::Leibniz, n, bc));
      c.expect(column_delta_sparse(Column::Hochschild, n, bc).to_dense() == ho,
               where(name, "Hochschild column differs from oracle in" + deg));
      c.expect(column_delta_sparse(Column::Leibniz, n, bc).to_dense() == lo,
               where(name, "Leibniz column differs from oracle in" + deg));
      // the axes of the bicomplex itself: (n,0) -> (n+1,0) and (0,n) -> (0,n+1)
      if (n >= 1) c.expect(total_block(n, n, n + 1, bc) == ho, where(name, "p-axis block differs from oracle in" + deg));
      c.expect(total_block(n, 0, 0, bc) == lo, where(name, "q-axis block differs from oracle in" + deg));
    }
    dims << " " << name << ":";
    for (int n = 0; n <= 3; ++n) {
      const std::size_t hd = column_space_dim(Column::Hochschild, n, bc);
      const std::size_t ld = column_space_dim(Column::Leibniz, n, bc);
      const std::size_t h_oracle = oracle::cohomology_dim(n ? hoch[n - 1] : oracle::Dense{}, hoch[n], hd);
      const std::size_t l_oracle = oracle::cohomology_dim(n ? leib[n - 1] : oracle::Dense{}, leib[n], ld);
      const std::size_t h_engine = compute_cohomology(n, bc, Column::Hochschild).dim;
      const std::size_t l_engine = compute_cohomology(n, bc, Column::Leibniz).dim;
      c.expect(h_oracle == h_engine, where(name, "HH^" + std::to_string(n) + " dimension differs from oracle"));
      c.expect(l_oracle == l_engine, where(name, "HL^" + std::to_string(n) + "(L) dimension differs from oracle"));
      dims << " HH" << n << "=" << h_engine << " HL" << n << "(L)=" << l_engine;
    }
  }
  extra = "(" + dims.str().substr(1) + ")";
  return c;
}

// 9. CLI end to end
json run_json(Criterion& c, const std::string& args, int expected_code = 0) {
  const CliRun r = run_cli(args + " --json");
  c.expect(r.code == expected_code, "cpair " + args + " exited " + std::to_string(r.code));
  try {
    return json::parse(r.out);
  } catch (const json::exception&) {
    c.expect(false, "cpair " + args + " printed invalid JSON");
    return json::object();
  }
}

Criterion cli_suite(const std::vector<std::pair<std::string, Deformation>>& fixtures) {
  Criterion c;
  const auto dir = scratch_dir("acceptance_" + std::to_string(::getpid()));
  for (const auto& name : names()) {
    const CatalogEntry& e = catalog_entry(name);
    const CliRun exported = run_cli("catalog export " + name);
    c.expect(exported.code == 0, "catalog export " + name + " failed");
    const std::string pair_file = write_file(dir / (name + ".json"), exported.out);
    const PairDocument doc = parse_pair_document(parse_json_text(exported.out));
    c.expect(export_pair(doc.pair) == export_pair(e.pair), name + ": exported pair does not round-trip");
    c.expect(run_cli("validate " + pair_file).code == 0, name + ": validate failed");

    std::vector<std::string> def_files;
    for (std::size_t i = 0; i < e.featured_deformations.size(); ++i) {
      const Deformation& d = e.featured_deformations[i].second;
      const CliRun de = run_cli("catalog export " + name + " --deformation " + std::to_string(i + 1));
      const std::string file = write_file(dir / (name + "_d" + std::to_string(i + 1) + ".json"), de.out);
      def_files.push_back(file);
      c.expect(parse_deformation_document(parse_json_text(de.out)).deformation == d,
               name + ": exported deformation does not round-trip");
      const std::string label = name + " " + e.featured_deformations[i].first;

      // criterion 4 quantities
      const json v = run_json(c, "deform " + file + " validate");
      c.expect(v.value("valid", false), label + ": CLI validate");
      const json inf = run_json(c, "deform " + file + " infinitesimal");
      const Bicomplex bc = Bicomplex::adjoint(d.pair);
      c.expect(inf["infinitesimal"] == export_total_cochain(infinitesimal(d), d.pair), label + ": infinitesimal differs");
      c.expect(inf["is_cocycle"] == is_cocycle(infinitesimal_cocycle(d), bc), label + ": cocycle flag differs");
      c.expect(inf["is_coboundary"] == is_coboundary(infinitesimal_cocycle(d), bc), label + ": coboundary flag differs");

      // criterion 6 through the CLI
      const json ext = run_json(c, "deform " + file + " extend --to 4");
      const ExtensionResult lib = extend_to(d, 4);
      c.expect(ext["complete"] == lib.complete, label + ": extend completion differs");
      c.expect(ext["deformation"] == export_deformation(lib.deformation), label + ": extended deformation differs");
      Deformation step = d;
      for (const auto& s : ext["steps"]) {
        c.expect(s.value("valid", false), label + ": CLI extension step invalid");
        c.expect(s["theta"] == export_total_cochain(obstruction(step).total(), d.pair), label + ": step theta differs");
        c.expect(s["thetaA_equals_half_bracket_sum"] == (obstruction(step).theta_a == half_bracket_sum(step)),
                 label + ": half bracket flag differs");
        if (step.order() < lib.deformation.order()) step = lib.deformation.truncated(step.order() + 1);
      }
    }

    if (name == "heisenberg") {
      const json classes = run_json(c, "cohomology " + pair_file + " --degree 2 --classes " + def_files[0] + " " +
                                           def_files[1] + " " + def_files[2]);
      std::vector<TotalCochain> cocycles;
      for (const auto& [label, d] : e.featured_deformations) cocycles.push_back(infinitesimal_cocycle(d));
      const Bicomplex bc = Bicomplex::adjoint(e.pair);
      c.expect(classes["classes"]["rank"] == class_rank(cocycles, bc), "heisenberg: class rank differs");
      c.expect(classes["dim"] == cohomology_dim(2, bc), "heisenberg: dim HL^2 differs");
      for (std::size_t i = 0; i < def_files.size(); ++i)
        for (std::size_t j = 0; j < def_files.size(); ++j) {
          const json eq = run_json(c, "deform " + def_files[i] + " equivalent " + def_files[j]);
          const bool lib = equivalent_infinitesimals_differ_by_coboundary(e.featured_deformations[i].second,
                                                                          e.featured_deformations[j].second)
                               .has_value();
          c.expect(eq["equivalent_at_order_1"] == lib, "heisenberg: equivalence verdict differs");
        }
    }
  }

  // criterion 5 through the CLI on every obstruction fixture
  int k = 0;
  for (const auto& [label, d] : fixtures) {
    const std::string file = write_file(dir / ("fixture_" + std::to_string(k++) + ".json"), export_deformation(d).dump());
    const json o = run_json(c, "deform " + file + " obstruction");
    const Obstruction theta = obstruction(d);
    const ObstructionCheck check = check_obstruction(theta, Bicomplex::adjoint(d.pair));
    c.expect(o["theta"] == export_total_cochain(theta.total(), d.pair), label + ": CLI theta differs");
    c.expect(o["cocycle"] == is_cocycle(theta.total(), Bicomplex::adjoint(d.pair)), label + ": CLI cocycle differs");
    const json& ids = o["identities"];
    c.expect(ids["dH_thetaA"] == check.hochschild_closed && ids["dH_theta1_minus_dL_thetaA"] == check.mixed_a &&
                 ids["dH_theta2_plus_dL_theta1"] == check.mixed_b && ids["dv_thetaL_minus_dL_theta2"] == check.mixed_c &&
                 ids["dL_thetaL"] == check.leibniz_closed,
             label + ": CLI identities differ");
  }

  // exit-code contract on corrupted inputs
  json bad = export_pair(heisenberg().pair);
  bad["assoc"]["table"][0][2] = json::array({"2", "0", "0"});
  c.expect(run_cli("validate " + write_file(dir / "non_associative.json", bad.dump())).code == 1,
           "non-associative table should exit 1");
  bad = export_pair(heisenberg().pair);
  bad["assoc"]["table"][0][2][0] = "0.5";
  c.expect(run_cli("validate " + write_file(dir / "decimal.json", bad.dump())).code == 2, "decimal should exit 2");
  bad = export_pair(heisenberg().pair);
  bad["leibniz"]["table"][0][0] = 9;
  c.expect(run_cli("validate " + write_file(dir / "out_of_range.json", bad.dump())).code == 2,
           "out-of-range index should exit 2");
  c.expect(run_cli("validate " + write_file(dir / "truncated.json", "{\"field\": \"Q\", \"assoc\": ")).code == 2,
           "malformed JSON should exit 2");
  return c;
}

template <typename F>
auto timed(double& seconds, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  auto r = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string took(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << "(" << s << " s)";
  return o.str();
}

}  // namespace

int main() {
  bool all = true;
  double s = 0;
  std::string extra;

  auto c1 = timed(s, complex_suite);
  all &= report(1, "complex identities dH^2, dL^2, dH dv, dH dL = dL dH, dv dL = dL dv, dtot^2", c1, took(s));
  auto c2 = timed(s, dgla_suite);
  all &= report(2, "dH f = (-1)^|f| [alpha, f], graded antisymmetry and Jacobi", c2, took(s));
  auto c3 = timed(s, equivariance_suite);
  all &= report(3, "dH [x, f] = [x, dH f]", c3, took(s));
  auto c4 = timed(s, [&] { return heisenberg_suite(extra); });
  all &= report(4, "Heisenberg cocycles phi1, phi2, phi3", c4, extra + " " + took(s));

  const auto fixtures = obstruction_fixtures();
  auto c5 = timed(s, [&] { return obstruction_suite(fixtures, extra); });
  all &= report(5, "obstruction is a 3-cocycle with its four component identities", c5, extra + " " + took(s));
  auto c6 = timed(s, [&] { return extension_suite(extra); });
  all &= report(6, "extension through order 4 with thetaA = 1/2 sum [alpha_i, alpha_j]", c6, extra + " " + took(s));

  auto c7 = timed(s, equivalence_suite);
  all &= report(7, "inf(d~) - inf(d) = dtot(phi1, psi1) for random order-2 equivalences", c7.literal, took(s));
  report(7, "(twisted form) twist(inf(d~) - inf(d)) = dtot(phi1, -psi1)", c7.twisted);
  report(7, "(componentwise) dH phi1, dL phi1 + dv psi1, dL psi1", c7.componentwise);

  auto c8 = timed(s, [&] { return oracle_suite(extra); });
  all &= report(8, "Hochschild and Leibniz axes agree with brute-force oracles, degrees <= 3", c8, extra + " " + took(s));
  auto c9 = timed(s, [&] { return cli_suite(fixtures); });
  all &= report(9, "CLI end to end in --json mode and exit-code contract", c9, took(s));

  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
