// Brute-force reference complexes. They read only structure constants and sum
// the defining formulas term by term; nothing here calls the library's
// differentials or elimination code.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "cpair/algebra.hpp"

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;  // row-major

/// Hochschild differential C^n(A, M) -> C^{n+1}(A, M), n >= 0.
/// Coordinates: argument tuple (first argument most significant), then output.
Dense hochschild_matrix(const cpair::CourantPair& pair, const cpair::CPModule& module, int n);

/// Leibniz differential Hom(L^n, P) -> Hom(L^{n+1}, P).
Dense leibniz_matrix(const cpair::CourantPair& pair, const cpair::CPModule& module, int n);

std::size_t rank(Dense m);

/// Cohomology dimension from consecutive differentials (previous may be empty for n = 0).
std::size_t cohomology_dim(const Dense& incoming, const Dense& outgoing, std::size_t cochain_dim);

}  // namespace oracle
