#include "cpair/algebra.hpp"

#include <functional>

#include "cpair/errors.hpp"
#include "cpair/linalg.hpp"

namespace cpair {

Bilinear::Bilinear(std::size_t left_dim, std::size_t right_dim, std::size_t out_dim)
    : left_(left_dim), right_(right_dim), out_(out_dim), entries_(left_dim * right_dim * out_dim) {}

Vector Bilinear::apply(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != left_ || v.size() != right_) throw InputError("bilinear map applied to vectors of wrong length");
  Vector out(out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (sgn(u[i]) == 0) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (sgn(v[j]) == 0) continue;
      const Scalar c = u[i] * v[j];
      auto row = (*this)(i, j);
      for (std::size_t k = 0; k < out_; ++k)
        if (sgn(row[k]) != 0) out[k] += c * row[k];
    }
  }
  return out;
}

void Bilinear::accumulate_left(std::size_t i, std::span<const Scalar> v, const Scalar& scale,
                               std::span<Scalar> out) const {
  for (std::size_t j = 0; j < right_; ++j) {
    if (sgn(v[j]) == 0) continue;
    const Scalar c = scale * v[j];
    auto row = (*this)(i, j);
    for (std::size_t k = 0; k < out_; ++k)
      if (sgn(row[k]) != 0) out[k] += c * row[k];
  }
}

void Bilinear::accumulate_right(std::span<const Scalar> u, std::size_t j, const Scalar& scale,
                                std::span<Scalar> out) const {
  for (std::size_t i = 0; i < left_; ++i) {
    if (sgn(u[i]) == 0) continue;
    const Scalar c = scale * u[i];
    auto row = (*this)(i, j);
    for (std::size_t k = 0; k < out_; ++k)
      if (sgn(row[k]) != 0) out[k] += c * row[k];
  }
}

bool Bilinear::is_zero() const { return cpair::is_zero(entries_); }

std::vector<std::string> default_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

Bilinear CourantPair::anchor_action() const {
  Bilinear mu(l_dim(), a_dim(), a_dim());
  for (std::size_t x = 0; x < anchor.size(); ++x)
    for (std::size_t a = 0; a < a_dim(); ++a)
      for (std::size_t k = 0; k < a_dim(); ++k) mu.at(x, a, k) = anchor[x].matrix(k, a);
  return mu;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const LawResult* ValidationReport::first_failure() const {
  for (const auto& law : laws)
    if (!law.passed) return &law;
  return nullptr;
}

void ValidationReport::merge(const ValidationReport& other) {
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
}

namespace {

using Labels = std::vector<std::string>;

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vector operator+(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector neg(Vector a) {
  for (auto& v : a) v = -v;
  return a;
}

// Runs `holds` over every basis tuple drawn from `spaces`; records the first failure.
LawResult check_law(std::string law, const std::vector<const Labels*>& spaces,
                    const std::function<bool(const std::vector<std::size_t>&)>& holds) {
  LawResult result{std::move(law), true, {}, {}};
  for (const Labels* s : spaces)
    if (s->empty()) return result;
  std::vector<std::size_t> idx(spaces.size(), 0);
  while (true) {
    if (!holds(idx)) {
      result.passed = false;
      for (std::size_t k = 0; k < idx.size(); ++k) result.witness.push_back((*spaces[k])[idx[k]]);
      return result;
    }
    std::size_t k = idx.size();
    while (k > 0) {
      --k;
      if (++idx[k] < spaces[k]->size()) break;
      idx[k] = 0;
      if (k == 0) return result;
    }
    if (idx.empty()) return result;
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

void require_shape(const Bilinear& b, std::size_t l, std::size_t r, std::size_t o, const std::string& name) {
  require(b.left_dim() == l && b.right_dim() == r && b.out_dim() == o, name + " has the wrong shape");
}

}  // namespace

void check_shapes(const CourantPair& pair) {
  const std::size_t n = pair.a_dim();
  const std::size_t m = pair.l_dim();
  require_shape(pair.algebra.mul, n, n, n, "algebra multiplication table");
  require_shape(pair.leibniz.bracket, m, m, m, "Leibniz bracket table");
  require(pair.anchor.size() == m, "anchor must have one derivation per basis element of L");
  for (const auto& d : pair.anchor)
    require(d.matrix.rows() == n && d.matrix.cols() == n, "anchor matrices must be dim(A) x dim(A)");
}

void check_shapes(const CourantPair& pair, const CPModule& module) {
  check_shapes(pair);
  const std::size_t n = pair.a_dim(), l = pair.l_dim(), m = module.m_dim(), p = module.p_dim();
  require_shape(module.a_left, n, m, m, "A_left");
  require_shape(module.a_right, m, n, m, "A_right");
  require_shape(module.m_left, l, m, m, "L_left_M");
  require_shape(module.m_right, m, l, m, "L_right_M");
  require_shape(module.p_left, l, p, p, "L_left_P");
  require_shape(module.p_right, p, l, p, "L_right_P");
  require_shape(module.phi, p, n, m, "phi");
}

ValidationReport validate_algebra(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  require_shape(alg.mul, n, n, n, "algebra multiplication table");
  const auto& L = alg.labels;
  ValidationReport report;
  report.laws.push_back(check_law("associativity", {&L, &L, &L}, [&](const auto& t) {
    const Vector ab = alg.mul.apply(alg.mul(t[0], t[1]), e(n, t[2]));
    const Vector bc = alg.mul.apply(e(n, t[0]), alg.mul(t[1], t[2]));
    return ab == bc;
  }));
  return report;
}

ValidationReport validate_leibniz(const LeibnizAlgebra& lb) {
  const std::size_t n = lb.dim();
  require_shape(lb.bracket, n, n, n, "Leibniz bracket table");
  const auto& L = lb.labels;
  const auto& br = lb.bracket;
  ValidationReport report;
  report.laws.push_back(check_law("leibniz identity", {&L, &L, &L}, [&](const auto& t) {
    const Vector lhs = br.apply(e(n, t[0]), br(t[1], t[2]));
    const Vector rhs = br.apply(br(t[0], t[1]), e(n, t[2])) + br.apply(e(n, t[1]), br(t[0], t[2]));
    return lhs == rhs;
  }));
  return report;
}

ValidationReport validate_pair(const CourantPair& pair) {
  check_shapes(pair);
  ValidationReport report = validate_algebra(pair.algebra);
  report.merge(validate_leibniz(pair.leibniz));
  const std::size_t n = pair.a_dim(), m = pair.l_dim();
  const auto& A = pair.algebra.labels;
  const auto& L = pair.leibniz.labels;
  const auto& mul = pair.algebra.mul;
  const auto& mu = pair.anchor;
  report.laws.push_back(check_law("mu(x) is a derivation", {&L, &A, &A}, [&](const auto& t) {
    const Matrix& d = mu[t[0]].matrix;
    const Vector lhs = d * Vector(mul(t[1], t[2]).begin(), mul(t[1], t[2]).end());
    const Vector rhs = mul.apply(d.column(t[1]), e(n, t[2])) + mul.apply(e(n, t[1]), d.column(t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("mu is a Leibniz homomorphism", {&L, &L}, [&](const auto& t) {
    Matrix lhs(n, n);
    auto coeffs = pair.leibniz.bracket(t[0], t[1]);
    for (std::size_t z = 0; z < m; ++z) {
      if (sgn(coeffs[z]) == 0) continue;
      Matrix term = mu[z].matrix;
      term *= coeffs[z];
      lhs = lhs + term;
    }
    const Matrix rhs = mu[t[0]].matrix * mu[t[1]].matrix - mu[t[1]].matrix * mu[t[0]].matrix;
    return lhs == rhs;
  }));
  return report;
}

ValidationReport validate_module(const CourantPair& pair, const CPModule& mod) {
  check_shapes(pair, mod);
  ValidationReport report;
  const std::size_t n = pair.a_dim(), l = pair.l_dim(), md = mod.m_dim(), pd = mod.p_dim();
  const auto& A = pair.algebra.labels;
  const auto& L = pair.leibniz.labels;
  const auto& M = mod.m_labels;
  const auto& P = mod.p_labels;
  const auto& mul = pair.algebra.mul;
  const auto& br = pair.leibniz.bracket;
  const Bilinear mu = pair.anchor_action();
  auto eA = [&](std::size_t i) { return e(n, i); };
  auto eL = [&](std::size_t i) { return e(l, i); };
  auto eM = [&](std::size_t i) { return e(md, i); };
  auto eP = [&](std::size_t i) { return e(pd, i); };
  auto vec = [](std::span<const Scalar> s) { return Vector(s.begin(), s.end()); };

  report.laws.push_back(check_law("M is a left A-module", {&A, &A, &M}, [&](const auto& t) {
    return mod.a_left.apply(eA(t[0]), mod.a_left(t[1], t[2])) == mod.a_left.apply(vec(mul(t[0], t[1])), eM(t[2]));
  }));
  report.laws.push_back(check_law("M is a right A-module", {&M, &A, &A}, [&](const auto& t) {
    return mod.a_right.apply(mod.a_right(t[0], t[1]), eA(t[2])) == mod.a_right.apply(eM(t[0]), mul(t[1], t[2]));
  }));
  report.laws.push_back(check_law("M is an A-bimodule", {&A, &M, &A}, [&](const auto& t) {
    return mod.a_right.apply(mod.a_left(t[0], t[1]), eA(t[2])) == mod.a_left.apply(eA(t[0]), mod.a_right(t[1], t[2]));
  }));
  report.laws.push_back(check_law("L acts symmetrically on M", {&M, &L}, [&](const auto& t) {
    return vec(mod.m_right(t[0], t[1])) == neg(vec(mod.m_left(t[1], t[0])));
  }));
  report.laws.push_back(check_law("L-module law on M", {&L, &L, &M}, [&](const auto& t) {
    const Vector lhs = mod.m_left.apply(eL(t[0]), mod.m_left(t[1], t[2]));
    const Vector rhs = mod.m_left.apply(br(t[0], t[1]), eM(t[2])) + mod.m_left.apply(eL(t[1]), mod.m_left(t[0], t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("L acts on M by derivations (left A-action)", {&L, &A, &M}, [&](const auto& t) {
    const Vector lhs = mod.m_left.apply(eL(t[0]), mod.a_left(t[1], t[2]));
    const Vector rhs = mod.a_left.apply(mu(t[0], t[1]), eM(t[2])) + mod.a_left.apply(eA(t[1]), mod.m_left(t[0], t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("L acts on M by derivations (right A-action)", {&L, &M, &A}, [&](const auto& t) {
    const Vector lhs = mod.m_left.apply(eL(t[0]), mod.a_right(t[1], t[2]));
    const Vector rhs = mod.a_right.apply(mod.m_left(t[0], t[1]), eA(t[2])) + mod.a_right.apply(eM(t[1]), mu(t[0], t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("Leibniz module law on P (x, y, p)", {&L, &L, &P}, [&](const auto& t) {
    const Vector lhs = mod.p_left.apply(eL(t[0]), mod.p_left(t[1], t[2]));
    const Vector rhs = mod.p_left.apply(br(t[0], t[1]), eP(t[2])) + mod.p_left.apply(eL(t[1]), mod.p_left(t[0], t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("Leibniz module law on P (x, p, y)", {&L, &P, &L}, [&](const auto& t) {
    const Vector lhs = mod.p_left.apply(eL(t[0]), mod.p_right(t[1], t[2]));
    const Vector rhs = mod.p_right.apply(mod.p_left(t[0], t[1]), eL(t[2])) + mod.p_right.apply(eP(t[1]), br(t[0], t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("Leibniz module law on P (p, x, y)", {&P, &L, &L}, [&](const auto& t) {
    const Vector lhs = mod.p_right.apply(eP(t[0]), br(t[1], t[2]));
    const Vector rhs = mod.p_right.apply(mod.p_right(t[0], t[1]), eL(t[2])) + mod.p_left.apply(eL(t[1]), mod.p_right(t[0], t[2]));
    return lhs == rhs;
  }));
  report.laws.push_back(check_law("phi(p) is a derivation A -> M", {&P, &A, &A}, [&](const auto& t) {
    const Vector lhs = mod.phi.apply(eP(t[0]), mul(t[1], t[2]));
    const Vector rhs = mod.a_right.apply(mod.phi(t[0], t[1]), eA(t[2])) + mod.a_left.apply(eA(t[1]), mod.phi(t[0], t[2]));
    return lhs == rhs;
  }));
  // [x, D](a) = [x, D(a)] - D(mu(x) a)
  auto bracket_x_phi = [&](std::size_t x, const Vector& p, std::size_t a) {
    return mod.m_left.apply(eL(x), mod.phi.apply(p, eA(a))) - mod.phi.apply(p, mu(x, a));
  };
  report.laws.push_back(check_law("phi([x,p]) = [x, phi(p)]", {&L, &P, &A}, [&](const auto& t) {
    return mod.phi.apply(mod.p_left(t[0], t[1]), eA(t[2])) == bracket_x_phi(t[0], eP(t[1]), t[2]);
  }));
  report.laws.push_back(check_law("phi([p,x]) = [phi(p), x]", {&P, &L, &A}, [&](const auto& t) {
    return mod.phi.apply(mod.p_right(t[0], t[1]), eA(t[2])) == neg(bracket_x_phi(t[1], eP(t[0]), t[2]));
  }));
  return report;
}

CPModule adjoint_module(const CourantPair& pair) {
  check_shapes(pair);
  const std::size_t n = pair.a_dim(), l = pair.l_dim();
  CPModule mod;
  mod.m_labels = pair.algebra.labels;
  mod.p_labels = pair.leibniz.labels;
  mod.a_left = pair.algebra.mul;
  mod.a_right = pair.algebra.mul;
  mod.p_left = pair.leibniz.bracket;
  mod.p_right = pair.leibniz.bracket;
  mod.m_left = pair.anchor_action();
  mod.m_right = Bilinear(n, l, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < l; ++x)
      for (std::size_t k = 0; k < n; ++k) mod.m_right.at(a, x, k) = -mod.m_left.at(x, a, k);
  mod.phi = mod.m_left;
  return mod;
}

std::vector<Derivation> commutator_derivations_basis(const AssocAlgebra& alg) {
  const std::size_t n = alg.dim();
  require_shape(alg.mul, n, n, n, "algebra multiplication table");
  // unknown D(k, s) sits at column k * n + s
  Matrix eqs(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k, ++row)
        for (std::size_t s = 0; s < n; ++s) {
          eqs(row, k * n + s) += alg.mul.at(a, b, s);
          eqs(row, s * n + a) -= alg.mul.at(s, b, k);
          eqs(row, s * n + b) -= alg.mul.at(a, s, k);
        }
  std::vector<Derivation> out;
  for (const Vector& v : nullspace_basis(eqs)) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t s = 0; s < n; ++s) d(k, s) = v[k * n + s];
    out.push_back({std::move(d)});
  }
  return out;
}

std::optional<Vector> coordinates_in(const std::vector<Matrix>& basis, const Matrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Vector> columns;
  for (const Matrix& b : basis) {
    if (b.rows() != r || b.cols() != c) throw InputError("coordinates_in: shape mismatch");
    Vector flat;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) flat.push_back(b(i, j));
    columns.push_back(std::move(flat));
  }
  Vector target;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) target.push_back(m(i, j));
  return solve(Matrix::from_columns(r * c, columns), target);
}

LeibnizAlgebra hemisemidirect(const LeibnizAlgebra& g, const Bilinear& action, const std::vector<std::string>& v_labels) {
  const std::size_t gd = g.dim(), vd = v_labels.size();
  require_shape(g.bracket, gd, gd, gd, "Lie bracket of g");
  require_shape(action, gd, vd, vd, "action of g on V");
  const auto& G = g.labels;
  for (std::size_t x = 0; x < gd; ++x)
    for (std::size_t y = 0; y < gd; ++y)
      if (neg(Vector(g.bracket(x, y).begin(), g.bracket(x, y).end())) != Vector(g.bracket(y, x).begin(), g.bracket(y, x).end()))
        throw InputError("g is not a Lie algebra: bracket not antisymmetric at (" + G[x] + ", " + G[y] + ")");
  if (const auto* bad = validate_leibniz(g).first_failure())
    throw InputError("g is not a Lie algebra: Jacobi identity fails at (" + bad->witness[0] + ", " + bad->witness[1] +
                     ", " + bad->witness[2] + ")");
  const LawResult rep = check_law("representation", {&G, &G, &v_labels}, [&](const auto& t) {
    const Vector lhs = action.apply(e(gd, t[0]), action(t[1], t[2])) - action.apply(e(gd, t[1]), action(t[0], t[2]));
    return lhs == action.apply(g.bracket(t[0], t[1]), e(vd, t[2]));
  });
  if (!rep.passed)
    throw InputError("action is not a representation at (" + rep.witness[0] + ", " + rep.witness[1] + ", " +
                     rep.witness[2] + ")");
  LeibnizAlgebra out;
  out.labels = G;
  out.labels.insert(out.labels.end(), v_labels.begin(), v_labels.end());
  out.bracket = Bilinear(gd + vd, gd + vd, gd + vd);
  for (std::size_t x = 0; x < gd; ++x) {
    for (std::size_t y = 0; y < gd; ++y)
      for (std::size_t k = 0; k < gd; ++k) out.bracket.at(x, y, k) = g.bracket.at(x, y, k);
    for (std::size_t v = 0; v < vd; ++v)
      for (std::size_t k = 0; k < vd; ++k) out.bracket.at(x, gd + v, gd + k) = action.at(x, v, k);
  }
  return out;
}

}  // namespace cpair
