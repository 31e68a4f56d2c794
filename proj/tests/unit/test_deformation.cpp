#include <gtest/gtest.h>

#include <random>

#include "cpair/catalog.hpp"
#include "cpair/deformation.hpp"
#include "cpair/errors.hpp"
#include "fixtures.hpp"

using namespace cpair;
using testing_support::CocycleSampler;

namespace {

const Deformation& featured(const CatalogEntry& e, std::size_t i) { return e.featured_deformations.at(i).second; }

/// A = Q, L = sl2, mu = 0.
CourantPair sl2_over_q() {
  CourantPair p;
  p.algebra = {{"1"}, Bilinear(1, 1, 1)};
  p.algebra.mul.at(0, 0, 0) = 1;
  p.leibniz = {{"h", "e", "f"}, Bilinear(3, 3, 3)};
  Bilinear& b = p.leibniz.bracket;
  b.at(0, 1, 1) = 2;
  b.at(1, 0, 1) = -2;
  b.at(0, 2, 2) = -2;
  b.at(2, 0, 2) = 2;
  b.at(1, 2, 0) = 1;
  b.at(2, 1, 0) = -1;
  p.anchor.assign(3, Derivation{Matrix(1, 1)});
  return p;
}

/// Valid deformations of orders 1..3 grown from random cocycles.
std::vector<Deformation> random_deformations(const CourantPair& pair, int count, std::mt19937_64& rng) {
  const CocycleSampler sampler(pair);
  std::vector<Deformation> out;
  for (int i = 0; i < count; ++i) {
    const Deformation d = sampler.deformation(rng);
    out.push_back(d);
    const ExtensionResult r = extend_to(d, 1 + i % 3);
    if (r.deformation.order() > 1) out.push_back(r.deformation);
  }
  return out;
}

Cochain curry_at(const Cochain& mu, std::span<const Scalar> x) {
  Cochain out(1, 0, mu.a_dim(), mu.l_dim(), mu.out_dim());
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!is_zero(x[k])) out += x[k] * curry_mu(mu, k);
  return out;
}

}  // namespace

TEST(Deformation, OrderZeroValidatesLikeThePair) {
  for (const auto& name : catalog_names()) {
    const Deformation d(catalog_entry(name).pair, 0);
    EXPECT_TRUE(validate_deformation(d).ok()) << name;
    EXPECT_THROW(infinitesimal(d), NoInfinitesimalError);
  }
  CourantPair bad = heisenberg().pair;
  bad.leibniz.bracket.at(0, 0, 0) = 1;
  EXPECT_FALSE(validate_deformation(Deformation(bad, 0)).ok());
}

TEST(Deformation, StructureCochainsMatchThePair) {
  const CourantPair& p = heisenberg().pair;
  const Deformation d(p, 2);
  EXPECT_EQ(d.alphas[0], structure_alpha(p));
  EXPECT_EQ(d.mus[0], structure_mu(p));
  EXPECT_EQ(d.lambdas[0], structure_lambda(p));
  EXPECT_EQ(d.order(), 2);
  EXPECT_TRUE(d.alphas[2].is_zero());
  EXPECT_EQ(d.truncated(1).order(), 1);
  EXPECT_EQ(structure_mu(p).value({1, 0})[1], 1);  // mu(e1)(x) = x
}

TEST(Deformation, HeisenbergFeaturedDeformations) {
  const CatalogEntry& h = heisenberg();
  const Bicomplex bc = Bicomplex::adjoint(h.pair);
  ASSERT_EQ(h.featured_deformations.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const Deformation& d = featured(h, i);
    EXPECT_TRUE(validate_deformation(d).ok());
    const TotalCochain inf = infinitesimal(d);
    EXPECT_TRUE(inf.component(2).is_zero());
    EXPECT_TRUE(inf.component(1).is_zero());
    EXPECT_EQ(inf.component(0), h.featured_cochains[i].second);
    EXPECT_TRUE(is_cocycle(infinitesimal_cocycle(d), bc));
    EXPECT_TRUE(is_cocycle(inf, bc));
    const auto [n, c] = n_infinitesimal(d);
    EXPECT_EQ(n, 1);
    EXPECT_EQ(c, inf);
  }
}

TEST(Deformation, DualNumbersDeformation) {
  const Deformation& d = featured(dual_numbers_line(), 0);
  EXPECT_TRUE(validate_deformation(d).ok());
  const Obstruction theta = obstruction(d);
  EXPECT_TRUE(theta.total().is_zero());
  EXPECT_TRUE(half_bracket_sum(d).is_zero());
  const auto next = extend(d);
  ASSERT_TRUE(next);
  EXPECT_EQ(next->order(), 2);
  EXPECT_TRUE(next->alphas[2].is_zero());
  EXPECT_TRUE(validate_deformation(*next).ok());
}

TEST(Deformation, NInfinitesimal) {
  const CatalogEntry& h = heisenberg();
  Deformation d(h.pair, 3);
  EXPECT_THROW(n_infinitesimal(d), NoInfinitesimalError);
  d.lambdas[3] = h.featured_cochains[0].second;
  EXPECT_TRUE(validate_deformation(d).ok());
  const auto [n, c] = n_infinitesimal(d);
  EXPECT_EQ(n, 3);
  EXPECT_TRUE(is_cocycle(structure_twist(c), Bicomplex::adjoint(h.pair)));
  EXPECT_TRUE(infinitesimal(d).is_zero());
}

TEST(Deformation, InvalidDeformationIsRefusedAndLocated) {
  Deformation d(heisenberg().pair, 1);
  d.alphas[1].at({0, 1}, 0) = 1;  // 1*x = x + t fails associativity at (1, 1, x)
  const DeformationReport r = validate_deformation(d);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.first_failure()->order, 1);
  EXPECT_FALSE(r.first_failure()->witness.empty());
  EXPECT_THROW(obstruction(d), InvalidDeformationError);
  EXPECT_THROW(extend(d), InvalidDeformationError);
}

TEST(Obstruction, TrivialDeformationHasZeroObstruction) {
  for (const auto& name : catalog_names()) {
    const Deformation d(catalog_entry(name).pair, 2);
    EXPECT_TRUE(obstruction(d).total().is_zero()) << name;
  }
}

TEST(Obstruction, HeisenbergObstructionsVanish) {
  const CatalogEntry& h = heisenberg();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(obstruction(featured(h, i)).total().is_zero());
    EXPECT_TRUE(obstruction_is_cocycle(featured(h, i)));
  }
}

TEST(Obstruction, RandomDeformationsGiveCocycles) {
  std::mt19937_64 rng(51);
  for (const auto& name : catalog_names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    const Bicomplex bc = Bicomplex::adjoint(pair);
    for (const Deformation& d : random_deformations(pair, 4, rng)) {
      ASSERT_TRUE(validate_deformation(d).ok()) << name;
      const Obstruction theta = obstruction(d);
      const ObstructionCheck c = check_obstruction(theta, bc);
      EXPECT_TRUE(c.hochschild_closed && c.mixed_a && c.mixed_b && c.mixed_c && c.leibniz_closed) << name;
      EXPECT_TRUE(is_cocycle(theta.total(), bc)) << name;
      EXPECT_EQ(theta.theta_a, -half_bracket_sum(d)) << name;
    }
  }
}

TEST(Obstruction, EquivalentDeformationsHaveCohomologousObstructions) {
  std::mt19937_64 rng(52);
  const CourantPair& pair = heisenberg().pair;
  const Bicomplex bc = Bicomplex::adjoint(pair);
  for (const Deformation& d : random_deformations(pair, 3, rng)) {
    const Deformation e = apply_equivalence(d, testing_support::random_equivalence(pair, d.order(), rng));
    ASSERT_TRUE(validate_deformation(e).ok());
    EXPECT_TRUE(is_coboundary(obstruction(d).total() - obstruction(e).total(), bc));
  }
}

TEST(Extension, ExtendedDeformationTruncatesBack) {
  std::mt19937_64 rng(53);
  for (const auto& name : catalog_names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    for (const Deformation& d : random_deformations(pair, 3, rng)) {
      const auto next = extend(d);
      if (!next) continue;
      EXPECT_EQ(next->order(), d.order() + 1);
      EXPECT_TRUE(validate_deformation(*next).ok());
      EXPECT_EQ(next->truncated(d.order()), d);
    }
  }
}

TEST(Extension, HeisenbergDeformationsExtendWithZeroTerms) {
  const CatalogEntry& h = heisenberg();
  for (std::size_t i = 0; i < 3; ++i) {
    const ExtensionResult r = extend_to(featured(h, i), 4);
    ASSERT_TRUE(r.complete);
    EXPECT_EQ(r.deformation.order(), 4);
    EXPECT_EQ(r.deformation.truncated(1), featured(h, i));
    for (int k = 2; k <= 4; ++k) {
      EXPECT_TRUE(r.deformation.alphas[k].is_zero());
      EXPECT_TRUE(r.deformation.mus[k].is_zero());
      EXPECT_TRUE(r.deformation.lambdas[k].is_zero());
    }
    EXPECT_TRUE(validate_deformation(r.deformation).ok());
  }
}

TEST(Extension, VanishingThirdCohomologyAlwaysExtends) {
  const CourantPair pair = sl2_over_q();
  ASSERT_TRUE(validate_pair(pair).ok());
  const Bicomplex bc = Bicomplex::adjoint(pair);
  ASSERT_EQ(cohomology_dim(3, bc), 0u);
  std::mt19937_64 rng(54);
  const CocycleSampler sampler(pair);
  for (int trial = 0; trial < 4; ++trial) {
    const ExtensionResult r = extend_to(sampler.deformation(rng), 3);
    EXPECT_TRUE(r.complete);
    EXPECT_TRUE(validate_deformation(r.deformation).ok());
  }
}

TEST(Rigidity, OneDimensionalUnitalAlgebraIsRigid) {
  CourantPair p;
  p.algebra = {{"1"}, Bilinear(1, 1, 1)};
  p.algebra.mul.at(0, 0, 0) = 1;
  p.leibniz.bracket = Bilinear(0, 0, 0);
  const RigidityReport r = rigidity_probe(p);
  EXPECT_TRUE(r.rigid);
  EXPECT_EQ(r.hl2_dim, 0u);
}

TEST(Rigidity, HeisenbergIsNotRigid) {
  const CatalogEntry& h = heisenberg();
  const Bicomplex bc = Bicomplex::adjoint(h.pair);
  const RigidityReport r = rigidity_probe(h.pair);
  EXPECT_FALSE(r.rigid);
  EXPECT_EQ(r.hl2_dim, 6u);
  EXPECT_EQ(class_rank(r.representatives, bc), r.hl2_dim);
  std::vector<TotalCochain> with_phis = r.representatives;
  for (std::size_t i = 0; i < 3; ++i) with_phis.push_back(infinitesimal(featured(h, i)));
  EXPECT_EQ(class_rank(with_phis, bc), r.hl2_dim);
}

TEST(Equivalence, IdentityLeavesDeformationUnchanged) {
  std::mt19937_64 rng(55);
  const CourantPair& pair = hemisemidirect_demo().pair;
  for (const Deformation& d : random_deformations(pair, 2, rng))
    EXPECT_EQ(apply_equivalence(d, identity_equivalence(pair, d.order())), d);
}

TEST(Equivalence, InverseRoundTrip) {
  std::mt19937_64 rng(56);
  for (const auto& name : catalog_names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    for (const Deformation& d : random_deformations(pair, 2, rng)) {
      const Equivalence e = testing_support::random_equivalence(pair, d.order(), rng);
      const Deformation moved = apply_equivalence(d, e);
      EXPECT_TRUE(validate_deformation(moved).ok()) << name;
      EXPECT_EQ(apply_equivalence(moved, inverse(e, pair, d.order())), d) << name;
    }
  }
}

TEST(Equivalence, FirstOrderCoefficientIdentities) {
  std::mt19937_64 rng(57);
  for (const auto& name : catalog_names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    for (const Deformation& d : random_deformations(pair, 2, rng)) {
      const Equivalence e = testing_support::random_equivalence(pair, 2, rng);
      const Deformation moved = apply_equivalence(d, e);
      EXPECT_TRUE(first_order_identities_hold(d, moved, e.phis[0], e.psis[0])) << name;
      const auto found = equivalent_infinitesimals_differ_by_coboundary(d, moved);
      ASSERT_TRUE(found) << name;
      EXPECT_TRUE(first_order_identities_hold(d, moved, found->phi1, found->psi1)) << name;
    }
  }
}

TEST(Equivalence, HeisenbergDeformationsAreNotEquivalent) {
  const CatalogEntry& h = heisenberg();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const auto found = equivalent_infinitesimals_differ_by_coboundary(featured(h, i), featured(h, j));
      EXPECT_EQ(found.has_value(), i == j);
      if (found) {
        EXPECT_TRUE(found->phi1.is_zero());
        EXPECT_TRUE(found->psi1.is_zero());
      }
    }
  EXPECT_THROW(equivalent_infinitesimals_differ_by_coboundary(featured(h, 0), Deformation(h.pair, 0)), InputError);
}

TEST(AppendixIdentities, CurriedAnchorIdentities) {
  std::mt19937_64 rng(58);
  for (const auto& name : catalog_names()) {
    const CourantPair& pair = catalog_entry(name).pair;
    for (const Deformation& d : random_deformations(pair, 3, rng)) {
      for (int n = 0; n <= d.order(); ++n)
        for (std::size_t x = 0; x < pair.l_dim(); ++x) {
          // sum_{i+j=n} [f_i^x, alpha_j] = 0
          Cochain c1(2, 0, pair.a_dim(), pair.l_dim(), pair.a_dim());
          for (int i = 0; i <= n; ++i) c1 += gerstenhaber_bracket(curry_mu(d.mus[i], x), d.alphas[n - i]);
          EXPECT_TRUE(c1.is_zero()) << name;
          // sum_{i+j=n} f_i^{lambda_j(x,y)} = sum_{i+j=n} [f_i^x, f_j^y]
          for (std::size_t y = 0; y < pair.l_dim(); ++y) {
            Cochain lhs(1, 0, pair.a_dim(), pair.l_dim(), pair.a_dim());
            Cochain rhs = lhs;
            for (int i = 0; i <= n; ++i) {
              lhs += curry_at(d.mus[i], d.lambdas[n - i].value({x, y}));
              rhs += gerstenhaber_bracket(curry_mu(d.mus[i], x), curry_mu(d.mus[n - i], y));
            }
            EXPECT_EQ(lhs, rhs) << name;
          }
        }
    }
  }
}
