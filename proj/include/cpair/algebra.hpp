#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpair/matrix.hpp"

namespace cpair {

/// Structure tensor of a bilinear map U x V -> W in fixed bases:
/// (*this)(i, j) is the coordinate vector of the product of basis elements i and j.
class Bilinear {
 public:
  Bilinear() = default;
  Bilinear(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim);

  std::size_t left_dim() const noexcept { return left_; }
  std::size_t right_dim() const noexcept { return right_; }
  std::size_t out_dim() const noexcept { return out_; }

  std::span<const Scalar> operator()(std::size_t i, std::size_t j) const {
    return {entries_.data() + (i * right_ + j) * out_, out_};
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return entries_[(i * right_ + j) * out_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return entries_[(i * right_ + j) * out_ + k];
  }

  /// Product of arbitrary coordinate vectors.
  Vector apply(std::span<const Scalar> u, std::span<const Scalar> v) const;
  /// Adds `scale * (e_i . v)` into `out`.
  void accumulate_left(std::size_t i, std::span<const Scalar> v, const Scalar& scale, std::span<Scalar> out) const;
  /// Adds `scale * (u . e_j)` into `out`.
  void accumulate_right(std::span<const Scalar> u, std::size_t j, const Scalar& scale, std::span<Scalar> out) const;

  bool is_zero() const;
  friend bool operator==(const Bilinear&, const Bilinear&) = default;

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<Scalar> entries_;
};

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n);

struct AssocAlgebra {
  std::vector<std::string> labels;
  Bilinear mul;

  std::size_t dim() const noexcept { return labels.size(); }
};

/// Left Leibniz algebra: [x,[y,z]] = [[x,y],z] + [y,[x,z]].
struct LeibnizAlgebra {
  std::vector<std::string> labels;
  Bilinear bracket;

  std::size_t dim() const noexcept { return labels.size(); }
};

/// Linear endomorphism of A; matrix(k, a) is the e_k coordinate of D(e_a).
struct Derivation {
  Matrix matrix;
};

/// Associative algebra A, Leibniz algebra L and anchor mu: L -> Der(A).
struct CourantPair {
  AssocAlgebra algebra;
  LeibnizAlgebra leibniz;
  std::vector<Derivation> anchor;  // one per basis element of L

  std::size_t a_dim() const noexcept { return algebra.dim(); }
  std::size_t l_dim() const noexcept { return leibniz.dim(); }

  /// mu as a bilinear map L x A -> A.
  Bilinear anchor_action() const;
};

/// Module (M, P) over a Courant pair.
///
/// M is an A-bimodule and symmetric L-module, P is a Leibniz L-module, and
/// phi sends each element of P to a derivation A -> M.
struct CPModule {
  std::vector<std::string> m_labels;
  std::vector<std::string> p_labels;
  Bilinear a_left;   // A x M -> M
  Bilinear a_right;  // M x A -> M
  Bilinear m_left;   // L x M -> M
  Bilinear m_right;  // M x L -> M
  Bilinear p_left;   // L x P -> P
  Bilinear p_right;  // P x L -> P
  Bilinear phi;      // P x A -> M

  std::size_t m_dim() const noexcept { return m_labels.size(); }
  std::size_t p_dim() const noexcept { return p_labels.size(); }
};

struct LawResult {
  std::string law;
  bool passed = true;
  /// Labels of the first offending basis tuple (empty when passed).
  std::vector<std::string> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<LawResult> laws;

  bool ok() const;
  const LawResult* first_failure() const;
  void merge(const ValidationReport& other);
};

/// Throws InputError when tensor shapes disagree with the declared bases.
void check_shapes(const CourantPair& pair);
void check_shapes(const CourantPair& pair, const CPModule& module);

ValidationReport validate_algebra(const AssocAlgebra& algebra);
ValidationReport validate_leibniz(const LeibnizAlgebra& leibniz);
ValidationReport validate_pair(const CourantPair& pair);
ValidationReport validate_module(const CourantPair& pair, const CPModule& module);

/// (M, P) = (A, L) with the actions induced by the products, the bracket and mu.
CPModule adjoint_module(const CourantPair& pair);

/// Basis of Der(A), the Lie algebra of derivations under the commutator,
/// from the linear system D(ab) = D(a)b + aD(b).
std::vector<Derivation> commutator_derivations_basis(const AssocAlgebra& algebra);

/// Coordinates of `m` in the basis `basis`, or nullopt when m is outside the span.
std::optional<Vector> coordinates_in(const std::vector<Matrix>& basis, const Matrix& m);

/// Hemisemidirect product g x V with [(x,u),(y,v)] = ([x,y], x.v).
/// `action` is g x V -> V. Throws InputError when g is not a Lie algebra or
/// the action is not a representation.
LeibnizAlgebra hemisemidirect(const LeibnizAlgebra& g, const Bilinear& action,
                              const std::vector<std::string>& v_labels);

}  // namespace cpair
