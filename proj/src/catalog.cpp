#include "cpair/catalog.hpp"

#include <stdexcept>

#include "cpair/errors.hpp"

namespace cpair {

AssocAlgebra truncated_polynomials(std::size_t n) {
  AssocAlgebra a;
  for (std::size_t i = 0; i < n; ++i) a.labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x" + std::to_string(i));
  a.mul = Bilinear(n, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) a.mul.at(i, j, i + j) = 1;
  return a;
}

namespace {

void self_test(const CatalogEntry& e) {
  const auto fail = [&](const std::string& what) { throw std::logic_error("catalog entry " + e.name + ": " + what); };
  if (!validate_pair(e.pair).ok()) fail("pair does not validate");
  const CPModule adj = adjoint_module(e.pair);
  if (!validate_module(e.pair, adj).ok()) fail("adjoint module does not validate");
  const Bicomplex bc(e.pair, adj);
  for (const auto& [name, c] : e.featured_cochains) {
    TotalCochain t = TotalCochain::zero(bc, 2);
    t.component(c.p()) = c;
    if (!is_cocycle(t, bc)) fail(name + " is not a cocycle");
  }
  for (const auto& [name, d] : e.featured_deformations)
    if (!validate_deformation(d).ok()) fail(name + " does not validate");
}

CatalogEntry make_heisenberg() {
  CatalogEntry e;
  e.name = "heisenberg";
  e.pair.algebra = truncated_polynomials(3);
  e.pair.leibniz.labels = {"e1", "e2", "e3"};
  e.pair.leibniz.bracket = Bilinear(3, 3, 3);
  e.pair.leibniz.bracket.at(0, 2, 1) = 1;
  e.pair.leibniz.bracket.at(2, 0, 1) = -1;
  Matrix d(3, 3);  // x d/dx on 1, x, x^2
  d(1, 1) = 1;
  d(2, 2) = 2;
  e.pair.anchor = {{d}, {Matrix(3, 3)}, {Matrix(3, 3)}};

  const std::pair<std::size_t, std::size_t> slots[] = {{0, 0}, {2, 2}, {2, 0}};
  for (int i = 0; i < 3; ++i) {
    Cochain phi(0, 2, 3, 3, 3);
    phi.at({slots[i].first, slots[i].second}, 1) = 1;
    const std::string name = "phi" + std::to_string(i + 1);
    Deformation def(e.pair, 1);
    def.lambdas[1] = phi;
    e.featured_cochains.emplace_back(name, phi);
    e.featured_deformations.emplace_back("pair+t(0,0," + name + ")", std::move(def));
  }
  e.notes =
      "Three-dimensional Heisenberg Leibniz algebra [e1,e3] = e2 = -[e3,e1]. The anchor of the original example "
      "acts on smooth functions on R^3; here A is the finite-dimensional stand-in Q[x]/(x^3) with mu(e1) = x d/dx "
      "and mu(e2) = mu(e3) = 0. The cocycle and non-equivalence properties of phi1, phi2, phi3 only use the bracket "
      "of L and mu(e2) = mu(e3) = 0, so they carry over.";
  return e;
}

CatalogEntry make_dual_numbers() {
  CatalogEntry e;
  e.name = "dual_numbers_line";
  e.pair.algebra = truncated_polynomials(2);
  e.pair.leibniz.bracket = Bilinear(0, 0, 0);
  Deformation def(e.pair, 1);
  def.alphas[1].at({1, 1}, 0) = 1;
  e.featured_deformations.emplace_back("x*x = t", std::move(def));
  e.notes = "Dual numbers with L = 0; the deformation x*x = t exercises the associative obstruction alone.";
  return e;
}

CatalogEntry make_hemisemidirect() {
  CatalogEntry e;
  e.name = "hemisemidirect_demo";
  e.pair.algebra = truncated_polynomials(3);
  const auto der = commutator_derivations_basis(e.pair.algebra);
  const std::size_t g = der.size(), n = e.pair.a_dim();
  std::vector<Matrix> mats;
  for (const auto& d : der) mats.push_back(d.matrix);
  LeibnizAlgebra lie;
  lie.labels = default_labels("d", g);
  lie.bracket = Bilinear(g, g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      const auto c = coordinates_in(mats, mats[i] * mats[j] - mats[j] * mats[i]);
      if (!c) throw std::logic_error("derivations are not closed under the commutator");
      for (std::size_t k = 0; k < g; ++k) lie.bracket.at(i, j, k) = (*c)[k];
    }
  Bilinear action(g, n, n);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t k = 0; k < n; ++k) action.at(i, v, k) = mats[i](k, v);
  std::vector<std::string> v_labels;
  for (const auto& l : e.pair.algebra.labels) v_labels.push_back("v" + l);
  e.pair.leibniz = hemisemidirect(lie, action, v_labels);
  for (std::size_t i = 0; i < g; ++i) e.pair.anchor.push_back({mats[i]});
  for (std::size_t v = 0; v < n; ++v) e.pair.anchor.push_back({Matrix(n, n)});
  e.notes = "Der(A) acting on A, with L = Der(A) + A under the hemisemidirect bracket and mu the projection.";
  return e;
}

CatalogEntry checked(CatalogEntry e) {
  self_test(e);
  return e;
}

}  // namespace

const CatalogEntry& heisenberg() {
  static const CatalogEntry e = checked(make_heisenberg());
  return e;
}

const CatalogEntry& dual_numbers_line() {
  static const CatalogEntry e = checked(make_dual_numbers());
  return e;
}

const CatalogEntry& hemisemidirect_demo() {
  static const CatalogEntry e = checked(make_hemisemidirect());
  return e;
}

std::vector<std::string> catalog_names() { return {"heisenberg", "dual_numbers_line", "hemisemidirect_demo"}; }

const CatalogEntry& catalog_entry(const std::string& name) {
  if (name == "heisenberg") return heisenberg();
  if (name == "dual_numbers_line") return dual_numbers_line();
  if (name == "hemisemidirect_demo") return hemisemidirect_demo();
  throw InputError("unknown catalog entry \"" + name + "\"");
}

}  // namespace cpair
