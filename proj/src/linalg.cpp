#include "cpair/linalg.hpp"

#include <algorithm>

#include "cpair/errors.hpp"

namespace cpair {

namespace {

// row -= factor * other, both sorted by index.
void axpy(SparseVector& row, const Scalar& factor, const SparseVector& other) {
  SparseVector out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Scalar v = a->second - factor * b->second;
      if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

}  // namespace

SparseVector to_sparse(std::span<const Scalar> dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (sgn(dense[i]) != 0) out.emplace_back(i, dense[i]);
  return out;
}

Vector to_dense(const SparseVector& sparse, std::size_t n) {
  Vector out(n);
  for (const auto& [i, v] : sparse) out.at(i) = v;
  return out;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s{m.rows(), m.cols(), {}};
  s.columns.resize(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, j)) != 0) s.columns[j].emplace_back(i, m(i, j));
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) m(i, j) = v;
  return m;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows);
  for (std::size_t j = 0; j < cols; ++j)
    for (const auto& [i, v] : columns[j]) out[i].emplace_back(j, v);
  return out;
}

Vector SparseMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols) throw InputError("matrix-vector dimension mismatch");
  Vector out(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    if (sgn(v[j]) == 0) continue;
    for (const auto& [i, a] : columns[j]) out[i] += a * v[j];
  }
  return out;
}

const SparseVector* EchelonBasis::find_pivot(std::size_t column) const {
  auto it = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), std::make_pair(column, std::size_t{0}));
  if (it == pivot_index_.end() || it->first != column) return nullptr;
  return &rows_[it->second];
}

SparseVector EchelonBasis::reduce(SparseVector row) const {
  std::size_t idx = 0;
  while (idx < row.size()) {
    const SparseVector* pivot = find_pivot(row[idx].first);
    if (pivot == nullptr) {
      ++idx;
      continue;
    }
    const Scalar factor = row[idx].second;  // pivot rows are monic
    axpy(row, factor, *pivot);
  }
  return row;
}

bool EchelonBasis::insert(SparseVector row) {
  for (const auto& entry : row)
    if (entry.first >= width_) throw InputError("row index exceeds echelon width");
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const Scalar lead = row.front().second;
  if (lead != 1)
    for (auto& entry : row) entry.second /= lead;
  const std::size_t column = row.front().first;
  rows_.push_back(std::move(row));
  auto pos = std::lower_bound(pivot_index_.begin(), pivot_index_.end(), std::make_pair(column, std::size_t{0}));
  pivot_index_.insert(pos, {column, rows_.size() - 1});
  return true;
}

void EchelonBasis::make_reduced() {
  // Later pivots first: those rows are already clear of every other pivot.
  for (auto it = pivot_index_.rbegin(); it != pivot_index_.rend(); ++it) {
    SparseVector& row = rows_[it->second];
    std::size_t idx = 1;
    while (idx < row.size()) {
      const SparseVector* pivot = find_pivot(row[idx].first);
      if (pivot == nullptr) {
        ++idx;
        continue;
      }
      const Scalar factor = row[idx].second;
      axpy(row, factor, *pivot);
    }
  }
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(pivot_index_.size());
  for (const auto& p : pivot_index_) out.push_back(p.first);
  return out;
}

namespace {

std::vector<SparseVector> dense_rows(const Matrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
  return rows;
}

std::vector<Vector> kernel_from_rows(std::vector<SparseVector> rows, std::size_t width) {
  EchelonBasis basis(width);
  for (auto& r : rows) basis.insert(std::move(r));
  basis.make_reduced();
  std::vector<std::size_t> slot(width, width);  // free column -> kernel vector index
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : basis.pivots()) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t c = 0; c < width; ++c) {
    if (is_pivot[c]) continue;
    slot[c] = kernel.size();
    kernel.push_back(unit_vector(width, c));
  }
  for (const auto& row : basis.rows()) {
    const std::size_t pc = row.front().first;
    for (std::size_t k = 1; k < row.size(); ++k) kernel[slot[row[k].first]][pc] = -row[k].second;
  }
  return kernel;
}

std::optional<Vector> solve_rows(std::vector<SparseVector> rows, std::size_t width, std::span<const Scalar> b) {
  if (b.size() != rows.size()) throw InputError("right-hand side length does not match matrix rows");
  EchelonBasis basis(width + 1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (sgn(b[i]) != 0) rows[i].emplace_back(width, b[i]);
    basis.insert(std::move(rows[i]));
  }
  for (std::size_t p : basis.pivots())
    if (p == width) return std::nullopt;
  basis.make_reduced();
  Vector x(width);
  for (const auto& row : basis.rows()) {
    if (row.back().first == width) x[row.front().first] = row.back().second;
  }
  return x;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  EchelonBasis basis(m.cols());
  for (auto& r : dense_rows(m)) basis.insert(std::move(r));
  return basis.rank();
}

std::size_t rank(const SparseMatrix& m) {
  // rank(M) = rank(M^T); the columns are already stored as sparse vectors.
  EchelonBasis basis(m.rows);
  for (const auto& c : m.columns) basis.insert(c);
  return basis.rank();
}

std::vector<Vector> nullspace_basis(const Matrix& m) { return kernel_from_rows(dense_rows(m), m.cols()); }

std::vector<Vector> nullspace_basis(const SparseMatrix& m) { return kernel_from_rows(m.row_vectors(), m.cols); }

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  return solve_rows(dense_rows(m), m.cols(), b);
}

std::optional<Vector> solve(const SparseMatrix& m, std::span<const Scalar> b) {
  return solve_rows(m.row_vectors(), m.cols, b);
}

bool in_span(const std::vector<Vector>& vectors, std::span<const Scalar> v) {
  EchelonBasis basis(v.size());
  for (const auto& u : vectors) {
    if (u.size() != v.size()) throw InputError("in_span: vector length mismatch");
    basis.insert(to_sparse(u));
  }
  return basis.contains(to_sparse(v));
}

}  // namespace cpair
