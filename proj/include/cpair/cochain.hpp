#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cpair/algebra.hpp"

namespace cpair {

/// A Courant pair together with a module (M, P); the context every cochain
/// operation is evaluated in.
class Bicomplex {
 public:
  Bicomplex(CourantPair pair, CPModule module);
  /// Bicomplex with coefficients in the adjoint module.
  static Bicomplex adjoint(CourantPair pair);

  const CourantPair& pair() const noexcept { return pair_; }
  const CPModule& module() const noexcept { return module_; }
  const Bilinear& anchor() const noexcept { return mu_; }

  std::size_t a_dim() const noexcept { return pair_.a_dim(); }
  std::size_t l_dim() const noexcept { return pair_.l_dim(); }
  std::size_t m_dim() const noexcept { return module_.m_dim(); }
  std::size_t p_dim() const noexcept { return module_.p_dim(); }
  /// Coefficient space of column p: P for p = 0, M otherwise.
  std::size_t out_dim(int p) const noexcept { return p == 0 ? p_dim() : m_dim(); }

 private:
  CourantPair pair_;
  CPModule module_;
  Bilinear mu_;
};

/// Element of C^{p,q}: a multilinear map of p arguments from A followed by q
/// arguments from L.
///
/// Coordinates are stored L-tuple major, then A-tuple, then output index; each
/// tuple is ordered with its first argument most significant. For fixed
/// L-arguments the values therefore form a contiguous slice, which is an
/// element of C^p(A, M) (or of P when p = 0).
class Cochain {
 public:
  Cochain() = default;
  Cochain(int p, int q, std::size_t a_dim, std::size_t l_dim, std::size_t out_dim);
  static Cochain zero(const Bicomplex& bc, int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  std::size_t a_dim() const noexcept { return a_dim_; }
  std::size_t l_dim() const noexcept { return l_dim_; }
  std::size_t out_dim() const noexcept { return out_dim_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// dim(A)^p * dim(M or P): size of the slice for fixed L-arguments.
  std::size_t slice_size() const noexcept { return a_count_ * out_dim_; }
  std::size_t a_count() const noexcept { return a_count_; }
  std::size_t l_count() const noexcept { return l_count_; }

  /// Value at basis arguments (A-indices first, then L-indices).
  std::span<const Scalar> value(std::span<const std::size_t> args) const;
  std::span<Scalar> value(std::span<const std::size_t> args);
  std::span<const Scalar> value(std::initializer_list<std::size_t> args) const {
    return value(std::span<const std::size_t>(args.begin(), args.size()));
  }
  std::span<Scalar> value(std::initializer_list<std::size_t> args) {
    return value(std::span<const std::size_t>(args.begin(), args.size()));
  }
  Scalar& at(std::initializer_list<std::size_t> args, std::size_t k);

  std::span<const Scalar> slice(std::size_t l_index) const {
    return {values_.data() + l_index * slice_size(), slice_size()};
  }
  std::span<Scalar> slice(std::size_t l_index) { return {values_.data() + l_index * slice_size(), slice_size()}; }

  const Vector& coefficients() const noexcept { return values_; }
  Vector& coefficients() noexcept { return values_; }

  bool is_zero() const;
  bool same_shape(const Cochain& other) const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Scalar& s);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  Cochain operator-() const;
  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  int p_ = 0;
  int q_ = 0;
  std::size_t a_dim_ = 0;
  std::size_t l_dim_ = 0;
  std::size_t out_dim_ = 0;
  std::size_t a_count_ = 1;
  std::size_t l_count_ = 1;
  Vector values_;

  std::size_t offset(std::span<const std::size_t> args) const;
};

/// Evaluates a cochain on arbitrary coordinate vectors (A-arguments first).
Vector evaluate(const Cochain& f, std::span<const Vector> args);

/// Element of Tot^n = sum over p + q = n of C^{p,q}; components ordered by
/// p descending (C^{n,0} first, C^{0,n} last).
class TotalCochain {
 public:
  TotalCochain() = default;
  explicit TotalCochain(std::vector<Cochain> components);
  static TotalCochain zero(const Bicomplex& bc, int degree);
  static TotalCochain from_coordinates(const Bicomplex& bc, int degree, std::span<const Scalar> coordinates);

  int degree() const noexcept { return degree_; }
  const Cochain& component(int p) const;
  Cochain& component(int p);
  const std::vector<Cochain>& components() const noexcept { return components_; }

  /// Concatenated coordinates in component order.
  Vector coordinates() const;
  std::size_t size() const;

  bool is_zero() const;
  TotalCochain& operator+=(const TotalCochain& other);
  TotalCochain& operator-=(const TotalCochain& other);
  TotalCochain& operator*=(const Scalar& s);
  friend TotalCochain operator+(TotalCochain a, const TotalCochain& b) { return a += b; }
  friend TotalCochain operator-(TotalCochain a, const TotalCochain& b) { return a -= b; }
  TotalCochain operator-() const;
  friend bool operator==(const TotalCochain&, const TotalCochain&) = default;

 private:
  int degree_ = 0;
  std::vector<Cochain> components_;
};

/// Hochschild differential C^{p,q} -> C^{p+1,q}, applied for each fixed tuple
/// of L-arguments. Requires p >= 1.
Cochain hochschild_delta(const Cochain& f, const Bicomplex& bc);

/// [x, f] for basis element x of L, acting on values: on C^p(A, M) for p >= 1
/// by [x, f](a) = [x, f(a)] - sum_i f(.., mu(x) a_i, ..), on P for p = 0.
Cochain module_action(std::size_t x, const Cochain& f, const Bicomplex& bc);

/// Leibniz coboundary C^{p,q} -> C^{p,q+1} of L with coefficients in C^p(A, M)
/// (in P when p = 0).
Cochain leibniz_delta(const Cochain& f, const Bicomplex& bc);

/// C^{0,q} -> C^{1,q}: (d psi)(a; x) = phi(psi(x))(a). Requires p = 0.
Cochain vertical_delta(const Cochain& psi, const Bicomplex& bc);

/// Total differential: on C^{p,q} it is d_H + (-1)^p d_L for p >= 1 and
/// d_v + d_L for p = 0.
TotalCochain total_delta(const TotalCochain& c, const Bicomplex& bc);

/// Gerstenhaber composition of Hochschild cochains (q = 0). The inner cochain
/// must take values in A.
Cochain circle(const Cochain& f, const Cochain& g);
/// [f, g] = f o g - (-1)^{(p-1)(q-1)} g o f.
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

/// The Hochschild 1-cochain a -> mu_i(x, a) from a (1,1)-cochain.
Cochain curry_mu(const Cochain& mu_i, std::size_t x);

/// Negates every component with q >= 1. Identifies structure coefficients
/// (alpha, mu, lambda) with total cochains so that the linearized deformation
/// equations become the cocycle condition.
TotalCochain structure_twist(const TotalCochain& c);

}  // namespace cpair
