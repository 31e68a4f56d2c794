#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpair/cochain.hpp"
#include "cpair/cohomology.hpp"

namespace cpair {

/// Structure cochains of a pair: alpha in C^{2,0}, mu in C^{1,1} (stored as
/// mu(a; x) = mu(x)(a)), lambda in C^{0,2} with values in L.
Cochain structure_alpha(const CourantPair& pair);
Cochain structure_mu(const CourantPair& pair);
Cochain structure_lambda(const CourantPair& pair);

/// Truncated formal deformation alpha_t = sum alpha_i t^i (and likewise mu_t,
/// lambda_t) up to order N. Index 0 holds the structure of the pair itself.
struct Deformation {
  CourantPair pair;
  std::vector<Cochain> alphas;
  std::vector<Cochain> mus;
  std::vector<Cochain> lambdas;

  /// Order N deformation with all higher coefficients zero.
  Deformation(CourantPair pair, int order);

  int order() const noexcept { return static_cast<int>(alphas.size()) - 1; }
  /// Sets (alpha_i, mu_i, lambda_i); extends the order when i > order().
  void set_coefficient(int i, Cochain alpha, Cochain mu, Cochain lambda);
  Deformation truncated(int order) const;

  friend bool operator==(const Deformation& a, const Deformation& b) {
    return a.alphas == b.alphas && a.mus == b.mus && a.lambdas == b.lambdas;
  }
};

/// Formal automorphism Phi_t = id + sum phi_k t^k of A and Psi_t = id + sum psi_k t^k
/// of L. phis[k - 1] is phi_k, a (1,0)-cochain with values in A; psis[k - 1]
/// is psi_k, a (0,1)-cochain with values in L.
struct Equivalence {
  std::vector<Cochain> phis;
  std::vector<Cochain> psis;

  int order() const noexcept { return static_cast<int>(phis.size()); }
};

struct EquationResult {
  int order = 0;
  std::string equation;
  bool passed = true;
  std::vector<std::string> witness;
};

struct DeformationReport {
  std::vector<EquationResult> equations;

  bool ok() const;
  const EquationResult* first_failure() const;
};

/// Checks the associativity, anchor-derivation, anchor-homomorphism and
/// Leibniz equations order by order (orders 0..N).
DeformationReport validate_deformation(const Deformation& d);

/// (alpha_1, mu_1, lambda_1) as a total 2-cochain. Throws NoInfinitesimalError
/// when the order is 0.
TotalCochain infinitesimal(const Deformation& d);
/// structure_twist of the infinitesimal: a total 2-cocycle for every
/// deformation of order >= 1.
TotalCochain infinitesimal_cocycle(const Deformation& d);
/// First n with a nonzero coefficient, together with that coefficient.
/// Throws NoInfinitesimalError when every coefficient of order >= 1 vanishes.
std::pair<int, TotalCochain> n_infinitesimal(const Deformation& d);

/// Transports d along e, keeping d's order. Missing terms of e count as zero.
Deformation apply_equivalence(const Deformation& d, const Equivalence& e);
/// Inverse formal automorphism, truncated at `order`.
Equivalence inverse(const Equivalence& e, const CourantPair& pair, int order);
Equivalence identity_equivalence(const CourantPair& pair, int order);

/// First-order terms of an equivalence between two deformations.
struct FirstOrderEquivalence {
  Cochain phi1;  // (1,0)
  Cochain psi1;  // (0,1)
};

/// (phi_1, psi_1) with infinitesimal(d2) - infinitesimal(d1) =
/// (d_H phi_1, d_L phi_1 + d_v psi_1, d_L psi_1), found by solving the total
/// differential through structure_twist; nullopt when the infinitesimals lie
/// in different classes. Throws InputError when d1 and d2 have different
/// pairs or order 0.
std::optional<FirstOrderEquivalence> equivalent_infinitesimals_differ_by_coboundary(const Deformation& d1,
                                                                                   const Deformation& d2);

/// Checks infinitesimal(d2) - infinitesimal(d1) = (d_H phi1, d_L phi1 + d_v psi1, d_L psi1).
bool first_order_identities_hold(const Deformation& d1, const Deformation& d2, const Cochain& phi1,
                                 const Cochain& psi1);

/// Order N + 1 obstruction of an order N deformation.
struct Obstruction {
  int order = 0;
  Cochain theta_a;  // (3,0)
  Cochain theta1;   // (2,1), theta1(a, b; x)
  Cochain theta2;   // (1,2), theta2(a; x, y)
  Cochain theta_l;  // (0,3)

  TotalCochain total() const;
};

/// Throws InvalidDeformationError when d does not satisfy its equations.
Obstruction obstruction(const Deformation& d);

struct ObstructionCheck {
  bool hochschild_closed = false;  // d_H theta_A = 0
  bool mixed_a = false;            // d_H theta1 - d_L theta_A = 0
  bool mixed_b = false;            // d_H theta2 + d_L theta1 = 0
  bool mixed_c = false;            // d_v theta_L - d_L theta2 = 0
  bool leibniz_closed = false;     // d_L theta_L = 0

  bool all() const { return hochschild_closed && mixed_a && mixed_b && mixed_c && leibniz_closed; }
};

/// 1/2 sum over i + j = N + 1 (i, j > 0) of the Gerstenhaber brackets [alpha_i, alpha_j].
/// With the circle product used here this equals -theta_A.
Cochain half_bracket_sum(const Deformation& d);

ObstructionCheck check_obstruction(const Obstruction& theta, const Bicomplex& adjoint);
bool obstruction_is_cocycle(const Deformation& d);

/// Order N + 1 extension, or nullopt when the obstruction class is nonzero.
std::optional<Deformation> extend(const Deformation& d);

struct ExtensionResult {
  Deformation deformation;  // furthest order reached
  bool complete = false;
  /// Set when extension stopped: the obstruction whose class is nonzero.
  std::optional<Obstruction> blocking;
};

ExtensionResult extend_to(const Deformation& d, int target_order);

struct RigidityReport {
  std::size_t hl2_dim = 0;
  bool rigid = false;
  /// Cocycles spanning HL^2, as total cochains.
  std::vector<TotalCochain> representatives;
};

/// Sufficient test: HL^2 = 0 implies every deformation is trivial.
RigidityReport rigidity_probe(const CourantPair& pair);

}  // namespace cpair
