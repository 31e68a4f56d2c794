#include "cpair/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cpair/errors.hpp"

namespace cpair {

Column parse_column(const std::string& name) {
  if (name == "total") return Column::Total;
  if (name == "leibniz") return Column::Leibniz;
  if (name == "hochschild") return Column::Hochschild;
  throw InputError("unknown column \"" + name + "\" (expected total, leibniz or hochschild)");
}

std::string to_string(Column column) {
  switch (column) {
    case Column::Total: return "total";
    case Column::Leibniz: return "leibniz";
    case Column::Hochschild: return "hochschild";
  }
  return "total";
}

GradedBasisIndex graded_index(int n, const Bicomplex& bc) {
  if (n < 0) throw InputError("negative degree");
  GradedBasisIndex idx{n, {0}};
  for (int p = n; p >= 0; --p) {
    std::size_t size = bc.out_dim(p);
    for (int i = 0; i < p; ++i) size *= bc.a_dim();
    for (int i = 0; i < n - p; ++i) size *= bc.l_dim();
    idx.offsets.push_back(idx.offsets.back() + size);
  }
  return idx;
}

std::size_t total_space_dim(int n, const Bicomplex& bc) { return n < 0 ? 0 : graded_index(n, bc).total(); }

namespace {

void append_column(SparseMatrix& m, const std::vector<std::pair<std::size_t, const Cochain*>>& pieces) {
  SparseVector col;
  for (const auto& [offset, piece] : pieces) {
    const Vector& v = piece->coefficients();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) col.emplace_back(offset + i, v[i]);
  }
  std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  m.columns.push_back(std::move(col));
}

// HH^0 differential M -> C^1(A, M): m -> (a -> a m - m a).
SparseMatrix hochschild_zero(const Bicomplex& bc) {
  const std::size_t da = bc.a_dim(), dm = bc.m_dim();
  SparseMatrix m{da * dm, dm, {}};
  for (std::size_t j = 0; j < dm; ++j) {
    Vector col(da * dm);
    const Vector unit = unit_vector(dm, j);
    for (std::size_t a = 0; a < da; ++a) {
      std::span<Scalar> dst(col.data() + a * dm, dm);
      bc.module().a_left.accumulate_left(a, unit, 1, dst);
      bc.module().a_right.accumulate_right(unit, a, -1, dst);
    }
    m.columns.push_back(to_sparse(col));
  }
  return m;
}

Cochain hochschild_shape(const Bicomplex& bc, int p) {
  // C^p(A, M); for p = 0 this is M itself, stored with out_dim = dim M.
  return Cochain(p, 0, bc.a_dim(), bc.l_dim(), bc.m_dim());
}

}  // namespace

SparseMatrix total_delta_sparse(int n, const Bicomplex& bc) {
  const GradedBasisIndex src = graded_index(n, bc);
  const GradedBasisIndex dst = graded_index(n + 1, bc);
  SparseMatrix m{dst.total(), src.total(), {}};
  m.columns.reserve(src.total());
  for (int p = n; p >= 0; --p) {
    Cochain unit = Cochain::zero(bc, p, n - p);
    for (std::size_t i = 0; i < unit.size(); ++i) {
      unit.coefficients()[i] = 1;
      if (p == 0) {
        const Cochain v = vertical_delta(unit, bc);
        const Cochain l = leibniz_delta(unit, bc);
        append_column(m, {{dst.offset(1), &v}, {dst.offset(0), &l}});
      } else {
        const Cochain h = hochschild_delta(unit, bc);
        Cochain l = leibniz_delta(unit, bc);
        if (p % 2 == 1) l *= Scalar(-1);
        append_column(m, {{dst.offset(p + 1), &h}, {dst.offset(p), &l}});
      }
      unit.coefficients()[i] = 0;
    }
  }
  return m;
}

Matrix total_delta_matrix(int n, const Bicomplex& bc) { return total_delta_sparse(n, bc).to_dense(); }

std::size_t column_space_dim(Column column, int n, const Bicomplex& bc) {
  if (n < 0) return 0;
  switch (column) {
    case Column::Total: return total_space_dim(n, bc);
    case Column::Leibniz: return Cochain::zero(bc, 0, n).size();
    case Column::Hochschild: return hochschild_shape(bc, n).size();
  }
  return 0;
}

SparseMatrix column_delta_sparse(Column column, int n, const Bicomplex& bc) {
  if (n < 0) throw InputError("negative degree");
  if (column == Column::Total) return total_delta_sparse(n, bc);
  if (column == Column::Hochschild && n == 0) return hochschild_zero(bc);
  Cochain unit = column == Column::Leibniz ? Cochain::zero(bc, 0, n) : hochschild_shape(bc, n);
  SparseMatrix m{column_space_dim(column, n + 1, bc), unit.size(), {}};
  for (std::size_t i = 0; i < unit.size(); ++i) {
    unit.coefficients()[i] = 1;
    const Cochain image = column == Column::Leibniz ? leibniz_delta(unit, bc) : hochschild_delta(unit, bc);
    append_column(m, {{0, &image}});
    unit.coefficients()[i] = 0;
  }
  return m;
}

int default_degree_cap() {
  if (const char* env = std::getenv("CPAIR_DEGREE_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<int>(v);
  }
  return 3;
}

std::string cost_estimate(Column column, int n, const Bicomplex& bc) {
  std::ostringstream out;
  out << "degree " << n << ": cochain spaces of dimension " << column_space_dim(column, n - 1, bc) << ", "
      << column_space_dim(column, n, bc) << ", " << column_space_dim(column, n + 1, bc)
      << "; the largest differential is a " << column_space_dim(column, n + 1, bc) << " x "
      << column_space_dim(column, n, bc) << " matrix";
  return out.str();
}

CohomologyResult compute_cohomology(int n, const Bicomplex& bc, Column column, const CohomologyOptions& options) {
  if (n < 0) throw InputError("degree must be non-negative");
  if (n > options.degree_cap && !options.force)
    throw DegreeCapError("degree " + std::to_string(n) + " exceeds the cap of " + std::to_string(options.degree_cap) +
                         " (" + cost_estimate(column, n, bc) + ")");
  CohomologyResult r;
  r.degree = n;
  r.column = column;
  r.cochain_dim = column_space_dim(column, n, bc);
  const SparseMatrix out = column_delta_sparse(column, n, bc);
  r.cocycle_dim = r.cochain_dim - rank(out);
  if (n > 0) {
    const SparseMatrix in = column_delta_sparse(column, n - 1, bc);
    EchelonBasis image(r.cochain_dim);
    for (const auto& col : in.columns) image.insert(col);
    r.coboundary_dim = image.rank();
    if (options.representatives) {
      for (Vector& z : nullspace_basis(out))
        if (image.insert(to_sparse(z))) r.representatives.push_back(std::move(z));
    }
  } else if (options.representatives) {
    r.representatives = nullspace_basis(out);
  }
  r.dim = r.cocycle_dim - r.coboundary_dim;
  return r;
}

std::size_t cohomology_dim(int n, const Bicomplex& bc) { return compute_cohomology(n, bc).dim; }

std::size_t class_rank(const std::vector<TotalCochain>& cocycles, const Bicomplex& bc) {
  if (cocycles.empty()) return 0;
  const int n = cocycles.front().degree();
  if (n < 1) throw InputError("class_rank needs degree >= 1");
  const SparseMatrix in = total_delta_sparse(n - 1, bc);
  EchelonBasis span(in.rows);
  for (const auto& col : in.columns) span.insert(col);
  const std::size_t boundaries = span.rank();
  for (const auto& c : cocycles) {
    if (c.degree() != n) throw InputError("class_rank: cocycles of mixed degree");
    const Vector coords = c.coordinates();
    if (coords.size() != in.rows) throw InputError("cochain does not belong to this bicomplex");
    span.insert(to_sparse(coords));
  }
  return span.rank() - boundaries;
}

bool is_cocycle(const TotalCochain& c, const Bicomplex& bc) { return total_delta(c, bc).is_zero(); }

std::optional<TotalCochain> coboundary_preimage(const TotalCochain& c, const Bicomplex& bc) {
  if (c.degree() < 1) throw InputError("coboundaries live in degree >= 1");
  const SparseMatrix d = total_delta_sparse(c.degree() - 1, bc);
  const Vector coords = c.coordinates();
  if (coords.size() != d.rows) throw InputError("cochain does not belong to this bicomplex");
  auto x = solve(d, coords);
  if (!x) return std::nullopt;
  return TotalCochain::from_coordinates(bc, c.degree() - 1, *x);
}

bool is_coboundary(const TotalCochain& c, const Bicomplex& bc) { return coboundary_preimage(c, bc).has_value(); }

}  // namespace cpair
