#pragma once

#include <random>

#include "cpair/cochain.hpp"

namespace testing_support {

/// Small random rationals, zero about a third of the time.
inline cpair::Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> zero(0, 2), num(-6, 6), den(1, 4);
  if (zero(rng) == 0) return 0;
  cpair::Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

inline void randomize(cpair::Cochain& c, std::mt19937_64& rng) {
  for (auto& v : c.coefficients()) v = random_scalar(rng);
}

inline cpair::Cochain random_cochain(const cpair::Bicomplex& bc, int p, int q, std::mt19937_64& rng) {
  cpair::Cochain c = cpair::Cochain::zero(bc, p, q);
  randomize(c, rng);
  return c;
}

/// Hochschild cochain A^p -> A (the DGLA setting).
inline cpair::Cochain random_hochschild(const cpair::CourantPair& pair, int p, std::mt19937_64& rng) {
  cpair::Cochain c(p, 0, pair.a_dim(), pair.l_dim(), pair.a_dim());
  randomize(c, rng);
  return c;
}

inline cpair::TotalCochain random_total(const cpair::Bicomplex& bc, int n, std::mt19937_64& rng) {
  cpair::TotalCochain t = cpair::TotalCochain::zero(bc, n);
  for (int p = 0; p <= n; ++p) randomize(t.component(p), rng);
  return t;
}

}  // namespace testing_support
