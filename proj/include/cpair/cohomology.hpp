#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpair/cochain.hpp"
#include "cpair/linalg.hpp"

namespace cpair {

enum class Column {
  Total,       // HL^n of the pair: cohomology of the total complex
  Leibniz,     // HL^n(L, P): column p = 0 with the Leibniz coboundary
  Hochschild,  // HH^n(A, M)
};

Column parse_column(const std::string& name);
std::string to_string(Column column);

/// Offsets of the components of Tot^n inside the flat coordinate vector.
struct GradedBasisIndex {
  int degree = 0;
  std::vector<std::size_t> offsets;  // offsets[k] for p = degree - k; offsets.back() == total()

  std::size_t total() const { return offsets.back(); }
  std::size_t offset(int p) const { return offsets.at(degree - p); }
  std::size_t size(int p) const { return offsets.at(degree - p + 1) - offsets.at(degree - p); }
};

GradedBasisIndex graded_index(int n, const Bicomplex& bc);
/// dim Tot^n; zero for n < 0.
std::size_t total_space_dim(int n, const Bicomplex& bc);

/// Matrix of d: Tot^n -> Tot^{n+1} in the coordinates of graded_index.
SparseMatrix total_delta_sparse(int n, const Bicomplex& bc);
Matrix total_delta_matrix(int n, const Bicomplex& bc);

/// Differential of a single column complex, from degree n to n + 1.
SparseMatrix column_delta_sparse(Column column, int n, const Bicomplex& bc);
/// Dimension of degree n of a column complex.
std::size_t column_space_dim(Column column, int n, const Bicomplex& bc);

/// Cap on the degree of cohomology computations: CPAIR_DEGREE_CAP, or 3.
int default_degree_cap();

struct CohomologyOptions {
  bool representatives = false;
  bool force = false;  // ignore the degree cap
  int degree_cap = default_degree_cap();
};

struct CohomologyResult {
  int degree = 0;
  Column column = Column::Total;
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t dim = 0;
  /// Cocycles whose classes form a basis of the cohomology (if requested).
  std::vector<Vector> representatives;
};

/// Rough size of the work for degree n: dim of the source and target spaces.
std::string cost_estimate(Column column, int n, const Bicomplex& bc);

/// Throws DegreeCapError when n exceeds the cap and force is not set.
CohomologyResult compute_cohomology(int n, const Bicomplex& bc, Column column = Column::Total,
                                    const CohomologyOptions& options = {});

/// dim HL^n of the total complex.
std::size_t cohomology_dim(int n, const Bicomplex& bc);

/// Dimension of the span of the classes of the given cocycles (all of the same
/// degree n >= 1) in the total cohomology.
std::size_t class_rank(const std::vector<TotalCochain>& cocycles, const Bicomplex& bc);

bool is_cocycle(const TotalCochain& c, const Bicomplex& bc);
/// A preimage under the total differential, or nullopt. Requires degree >= 1.
std::optional<TotalCochain> coboundary_preimage(const TotalCochain& c, const Bicomplex& bc);
bool is_coboundary(const TotalCochain& c, const Bicomplex& bc);

}  // namespace cpair
