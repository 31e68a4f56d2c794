#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cpair/matrix.hpp"

namespace cpair {

/// Sorted (index, nonzero value) pairs.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(std::span<const Scalar> dense);
Vector to_dense(const SparseVector& sparse, std::size_t n);

/// Column-stored sparse matrix. The cohomology engine assembles differentials
/// column by column (the image of each basis cochain), so this is the native
/// layout there.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> columns;

  static SparseMatrix from_dense(const Matrix& m);
  Matrix to_dense() const;
  /// Rows of the matrix as sparse vectors (transposition).
  std::vector<SparseVector> row_vectors() const;
  Vector apply(std::span<const Scalar> v) const;
};

/// Incrementally built row-echelon basis over Q.
///
/// Each stored row has a distinct leading index and its leading entry is 1.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  /// Reduces `row` against the basis. Returns true (and stores it) when the
  /// row is independent of the rows added so far.
  bool insert(SparseVector row);

  /// Reduces `row` against the basis without storing it.
  SparseVector reduce(SparseVector row) const;

  bool contains(const SparseVector& row) const { return reduce(row).empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t width() const noexcept { return width_; }

  /// Brings the basis to reduced row-echelon form (pivot columns cleared in
  /// every other row).
  void make_reduced();

  const std::vector<SparseVector>& rows() const noexcept { return rows_; }
  std::vector<std::size_t> pivots() const;

 private:
  std::size_t width_;
  std::vector<SparseVector> rows_;
  // pivot column -> index into rows_, kept sorted by pivot column
  std::vector<std::pair<std::size_t, std::size_t>> pivot_index_;

  const SparseVector* find_pivot(std::size_t column) const;
};

std::size_t rank(const Matrix& m);
std::size_t rank(const SparseMatrix& m);

/// Basis of ker(m); every vector v satisfies m * v == 0.
std::vector<Vector> nullspace_basis(const Matrix& m);
std::vector<Vector> nullspace_basis(const SparseMatrix& m);

/// Some x with m * x == b, or nullopt when the system is inconsistent.
/// Throws InputError when b.size() != m.rows().
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
std::optional<Vector> solve(const SparseMatrix& m, std::span<const Scalar> b);

/// True iff v lies in the span of `vectors`. Throws InputError on length mismatch.
bool in_span(const std::vector<Vector>& vectors, std::span<const Scalar> v);

}  // namespace cpair
