// Randomized valid deformations for property tests.
#pragma once
#include <random>
#include <vector>
#include "cpair/cohomology.hpp"
#include "cpair/deformation.hpp"
#include "random.hpp"

namespace testing_support {

/// Draws order-1 deformations whose infinitesimal is a random total 2-cocycle.
class CocycleSampler {
 public:
  explicit CocycleSampler(const cpair::CourantPair& pair)
      : pair_(pair), bc_(cpair::Bicomplex::adjoint(pair)),
        kernel_(cpair::nullspace_basis(cpair::total_delta_sparse(2, bc_))) {}

  const cpair::Bicomplex& bicomplex() const { return bc_; }
  std::size_t cocycle_dim() const { return kernel_.size(); }

  cpair::TotalCochain cocycle(std::mt19937_64& rng) const {
    cpair::Vector v = cpair::zero_vector(cpair::total_space_dim(2, bc_));
    for (const auto& k : kernel_) {
      const cpair::Scalar c = random_scalar(rng);
      if (cpair::is_zero(c)) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * k[i];
    }
    return cpair::TotalCochain::from_coordinates(bc_, 2, v);
  }

  cpair::Deformation deformation(std::mt19937_64& rng) const {
    const cpair::TotalCochain s = cpair::structure_twist(cocycle(rng));
    cpair::Deformation d(pair_, 1);
    d.set_coefficient(1, s.component(2), s.component(1), s.component(0));
    return d;
  }

 private:
  cpair::CourantPair pair_;
  cpair::Bicomplex bc_;
  std::vector<cpair::Vector> kernel_;
};

/// Random formal automorphism (phi_k, psi_k), k = 1..order.
inline cpair::Equivalence random_equivalence(const cpair::CourantPair& pair, int order, std::mt19937_64& rng) {
  cpair::Equivalence e;
  for (int k = 1; k <= order; ++k) {
    cpair::Cochain phi(1, 0, pair.a_dim(), pair.l_dim(), pair.a_dim());
    cpair::Cochain psi(0, 1, pair.a_dim(), pair.l_dim(), pair.l_dim());
    randomize(phi, rng);
    randomize(psi, rng);
    e.phis.push_back(std::move(phi));
    e.psis.push_back(std::move(psi));
  }
  return e;
}

}  // namespace testing_support
