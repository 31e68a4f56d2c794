#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpair/deformation.hpp"

namespace cpair {

struct CatalogEntry {
  std::string name;
  CourantPair pair;
  /// Total 2-cocycles of the adjoint bicomplex, by name.
  std::vector<std::pair<std::string, Cochain>> featured_cochains;
  std::vector<std::pair<std::string, Deformation>> featured_deformations;
  std::string notes;
};

/// Heisenberg Leibniz algebra acting on A = Q[x]/(x^3) through e1 -> x d/dx.
/// Featured: phi1, phi2, phi3 in C^{0,2} and the deformations pair + t(0,0,phi_i).
const CatalogEntry& heisenberg();
/// A = Q[x]/(x^2), L = 0, with the deformation alpha_1(x, x) = 1.
const CatalogEntry& dual_numbers_line();
/// A = Q[x]/(x^3), L = Der(A) x A (hemisemidirect), mu the projection to Der(A).
const CatalogEntry& hemisemidirect_demo();

std::vector<std::string> catalog_names();
/// Throws InputError for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// Q[x]/(x^n) in the monomial basis 1, x, ..., x^{n-1}.
AssocAlgebra truncated_polynomials(std::size_t n);

}  // namespace cpair
