#include "cpair/deformation.hpp"

#include "cpair/errors.hpp"

namespace cpair {

Cochain structure_alpha(const CourantPair& pair) {
  const std::size_t n = pair.a_dim();
  Cochain c(2, 0, n, pair.l_dim(), n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) c.at({a, b}, k) = pair.algebra.mul.at(a, b, k);
  return c;
}

Cochain structure_mu(const CourantPair& pair) {
  const std::size_t n = pair.a_dim();
  Cochain c(1, 1, n, pair.l_dim(), n);
  for (std::size_t x = 0; x < pair.l_dim(); ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < n; ++k) c.at({a, x}, k) = pair.anchor.at(x).matrix(k, a);
  return c;
}

Cochain structure_lambda(const CourantPair& pair) {
  const std::size_t m = pair.l_dim();
  Cochain c(0, 2, pair.a_dim(), m, m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t k = 0; k < m; ++k) c.at({x, y}, k) = pair.leibniz.bracket.at(x, y, k);
  return c;
}

Deformation::Deformation(CourantPair p, int order) : pair(std::move(p)) {
  if (order < 0) throw InputError("deformation order must be non-negative");
  check_shapes(pair);
  alphas.push_back(structure_alpha(pair));
  mus.push_back(structure_mu(pair));
  lambdas.push_back(structure_lambda(pair));
  for (int i = 1; i <= order; ++i) {
    alphas.emplace_back(2, 0, pair.a_dim(), pair.l_dim(), pair.a_dim());
    mus.emplace_back(1, 1, pair.a_dim(), pair.l_dim(), pair.a_dim());
    lambdas.emplace_back(0, 2, pair.a_dim(), pair.l_dim(), pair.l_dim());
  }
}

void Deformation::set_coefficient(int i, Cochain alpha, Cochain mu, Cochain lambda) {
  if (i < 1) throw InputError("coefficient index must be >= 1");
  if (!alpha.same_shape(alphas[0]) || !mu.same_shape(mus[0]) || !lambda.same_shape(lambdas[0]))
    throw InputError("deformation coefficient has the wrong shape");
  while (order() < i) {
    alphas.push_back(Cochain(alphas[0].p(), 0, pair.a_dim(), pair.l_dim(), pair.a_dim()));
    mus.push_back(Cochain(1, 1, pair.a_dim(), pair.l_dim(), pair.a_dim()));
    lambdas.push_back(Cochain(0, 2, pair.a_dim(), pair.l_dim(), pair.l_dim()));
  }
  alphas[i] = std::move(alpha);
  mus[i] = std::move(mu);
  lambdas[i] = std::move(lambda);
}

Deformation Deformation::truncated(int n) const {
  if (n < 0 || n > order()) throw InputError("truncation order out of range");
  Deformation d = *this;
  d.alphas.resize(n + 1);
  d.mus.resize(n + 1);
  d.lambdas.resize(n + 1);
  return d;
}

bool DeformationReport::ok() const { return first_failure() == nullptr; }

const EquationResult* DeformationReport::first_failure() const {
  for (const auto& e : equations)
    if (!e.passed) return &e;
  return nullptr;
}

namespace {

Vector unit(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vector vec(std::span<const Scalar> s) { return Vector(s.begin(), s.end()); }

void add_to(std::span<Scalar> out, const Vector& v, int sign) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (sgn(v[k]) == 0) continue;
    if (sign > 0) out[k] += v[k];
    else out[k] -= v[k];
  }
}

struct Coefficients {
  const Deformation& d;

  Vector alpha(int i, const Vector& u, const Vector& v) const {
    const Vector args[] = {u, v};
    return evaluate(d.alphas[i], args);
  }
  Vector mu(int i, const Vector& x, const Vector& a) const {
    const Vector args[] = {a, x};
    return evaluate(d.mus[i], args);
  }
  Vector lambda(int i, const Vector& x, const Vector& y) const {
    const Vector args[] = {x, y};
    return evaluate(d.lambdas[i], args);
  }
};

// Sum over i + j = n (lo <= i, j <= N) of the quadratic deformation equations,
// signed so that lo = 1 gives the obstruction cochains.
Obstruction quadratic_terms(const Deformation& d, int n, int lo) {
  const std::size_t da = d.pair.a_dim(), dl = d.pair.l_dim();
  const int top = d.order();
  Obstruction r;
  r.order = n;
  r.theta_a = Cochain(3, 0, da, dl, da);
  r.theta1 = Cochain(2, 1, da, dl, da);
  r.theta2 = Cochain(1, 2, da, dl, da);
  r.theta_l = Cochain(0, 3, da, dl, dl);
  const Coefficients c{d};
  std::vector<std::pair<int, int>> pairs;
  for (int i = lo; i <= top; ++i)
    if (n - i >= lo && n - i <= top) pairs.emplace_back(i, n - i);
  if (pairs.empty()) return r;

  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < da; ++b)
      for (std::size_t e = 0; e < da; ++e) {
        auto out = r.theta_a.value({a, b, e});
        for (auto [i, j] : pairs) {
          add_to(out, c.alpha(i, unit(da, a), vec(d.alphas[j].value({b, e}))), +1);
          add_to(out, c.alpha(i, vec(d.alphas[j].value({a, b})), unit(da, e)), -1);
        }
      }
  for (std::size_t x = 0; x < dl; ++x)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t b = 0; b < da; ++b) {
        auto out = r.theta1.value({a, b, x});
        for (auto [i, j] : pairs) {
          add_to(out, c.mu(i, unit(dl, x), vec(d.alphas[j].value({a, b}))), +1);
          add_to(out, c.alpha(j, unit(da, a), vec(d.mus[i].value({b, x}))), -1);
          add_to(out, c.alpha(j, vec(d.mus[i].value({a, x})), unit(da, b)), -1);
        }
      }
  for (std::size_t x = 0; x < dl; ++x)
    for (std::size_t y = 0; y < dl; ++y)
      for (std::size_t a = 0; a < da; ++a) {
        auto out = r.theta2.value({a, x, y});
        for (auto [i, j] : pairs) {
          add_to(out, c.mu(i, vec(d.lambdas[j].value({x, y})), unit(da, a)), -1);
          add_to(out, c.mu(i, unit(dl, x), vec(d.mus[j].value({a, y}))), +1);
          add_to(out, c.mu(i, unit(dl, y), vec(d.mus[j].value({a, x}))), -1);
        }
      }
  for (std::size_t x = 0; x < dl; ++x)
    for (std::size_t y = 0; y < dl; ++y)
      for (std::size_t z = 0; z < dl; ++z) {
        auto out = r.theta_l.value({x, y, z});
        for (auto [i, j] : pairs) {
          add_to(out, c.lambda(i, unit(dl, x), vec(d.lambdas[j].value({y, z}))), -1);
          add_to(out, c.lambda(i, unit(dl, y), vec(d.lambdas[j].value({x, z}))), +1);
          add_to(out, c.lambda(i, vec(d.lambdas[j].value({x, y})), unit(dl, z)), +1);
        }
      }
  return r;
}

// Labels of the first basis tuple where c is nonzero, L-arguments listed first.
std::vector<std::string> first_witness(const Cochain& c, const CourantPair& pair) {
  const std::size_t n = c.p() + c.q();
  std::vector<std::size_t> args(n, 0);
  std::vector<std::size_t> dims;
  for (int i = 0; i < c.q(); ++i) dims.push_back(c.l_dim());
  for (int i = 0; i < c.p(); ++i) dims.push_back(c.a_dim());
  std::vector<std::size_t> t(n, 0);
  while (true) {
    // t lists L-arguments first; storage wants A-arguments first.
    for (int i = 0; i < c.p(); ++i) args[i] = t[c.q() + i];
    for (int i = 0; i < c.q(); ++i) args[c.p() + i] = t[i];
    if (!is_zero(c.value(args))) {
      std::vector<std::string> out;
      for (int i = 0; i < c.q(); ++i) out.push_back(pair.leibniz.labels[t[i]]);
      for (int i = 0; i < c.p(); ++i) out.push_back(pair.algebra.labels[t[c.q() + i]]);
      return out;
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++t[k] < dims[k]) break;
      t[k] = 0;
      if (k == 0) return {};
    }
    if (n == 0) return {};
  }
}

Matrix linear_map(const Cochain& c) {
  // (1,0)- or (0,1)-cochain as a square matrix, column = image of a basis vector.
  const std::size_t n = c.p() == 1 ? c.a_dim() : c.l_dim();
  Matrix m(c.out_dim(), n);
  for (std::size_t a = 0; a < n; ++a) {
    auto v = c.value({a});
    for (std::size_t k = 0; k < c.out_dim(); ++k) m(k, a) = v[k];
  }
  return m;
}

Cochain as_cochain(const Matrix& m, bool on_a, const CourantPair& pair) {
  Cochain c(on_a ? 1 : 0, on_a ? 0 : 1, pair.a_dim(), pair.l_dim(), m.rows());
  for (std::size_t a = 0; a < m.cols(); ++a)
    for (std::size_t k = 0; k < m.rows(); ++k) c.at({a}, k) = m(k, a);
  return c;
}

// Power series id + sum_k m_k t^k truncated at `order`; index 0 is the identity.
std::vector<Matrix> series(const std::vector<Cochain>& terms, std::size_t dim, int order) {
  std::vector<Matrix> s{Matrix::identity(dim)};
  for (int k = 1; k <= order; ++k)
    s.push_back(k <= static_cast<int>(terms.size()) ? linear_map(terms[k - 1]) : Matrix(dim, dim));
  return s;
}

std::vector<Matrix> inverse_series(const std::vector<Matrix>& s) {
  const std::size_t dim = s[0].rows();
  std::vector<Matrix> inv{Matrix::identity(dim)};
  for (std::size_t n = 1; n < s.size(); ++n) {
    Matrix acc(dim, dim);
    for (std::size_t k = 1; k <= n; ++k) acc = acc - s[k] * inv[n - k];
    inv.push_back(std::move(acc));
  }
  return inv;
}

void check_equivalence_shapes(const Equivalence& e, const CourantPair& pair) {
  for (const auto& phi : e.phis)
    if (phi.p() != 1 || phi.q() != 0 || phi.a_dim() != pair.a_dim() || phi.out_dim() != pair.a_dim())
      throw InputError("phi_k must be (1,0)-cochains with values in A");
  for (const auto& psi : e.psis)
    if (psi.p() != 0 || psi.q() != 1 || psi.l_dim() != pair.l_dim() || psi.out_dim() != pair.l_dim())
      throw InputError("psi_k must be (0,1)-cochains with values in L");
}

}  // namespace

DeformationReport validate_deformation(const Deformation& d) {
  DeformationReport report;
  for (int n = 0; n <= d.order(); ++n) {
    const Obstruction r = quadratic_terms(d, n, 0);
    const std::pair<const char*, const Cochain*> parts[] = {
        {"associativity", &r.theta_a},
        {"anchor acts by derivations", &r.theta1},
        {"anchor is a Leibniz homomorphism", &r.theta2},
        {"Leibniz identity", &r.theta_l},
    };
    for (const auto& [name, c] : parts) {
      EquationResult e{n, name, c->is_zero(), {}};
      if (!e.passed) e.witness = first_witness(*c, d.pair);
      report.equations.push_back(std::move(e));
    }
  }
  return report;
}

TotalCochain infinitesimal(const Deformation& d) {
  if (d.order() < 1) throw NoInfinitesimalError("deformation of order 0 has no infinitesimal");
  return TotalCochain({d.alphas[1], d.mus[1], d.lambdas[1]});
}

TotalCochain infinitesimal_cocycle(const Deformation& d) { return structure_twist(infinitesimal(d)); }

std::pair<int, TotalCochain> n_infinitesimal(const Deformation& d) {
  for (int n = 1; n <= d.order(); ++n) {
    TotalCochain t({d.alphas[n], d.mus[n], d.lambdas[n]});
    if (!t.is_zero()) return {n, std::move(t)};
  }
  throw NoInfinitesimalError("every coefficient of positive order vanishes");
}

Deformation apply_equivalence(const Deformation& d, const Equivalence& e) {
  check_equivalence_shapes(e, d.pair);
  const int top = d.order();
  const std::size_t da = d.pair.a_dim(), dl = d.pair.l_dim();
  const auto P = series(e.phis, da, top);
  const auto Q = series(e.psis, dl, top);
  const auto Pinv = inverse_series(P);
  const auto Qinv = inverse_series(Q);
  const Coefficients c{d};
  Deformation out(d.pair, top);
  for (int n = 0; n <= top; ++n) {
    Cochain& alpha = out.alphas[n];
    Cochain& mu = out.mus[n];
    Cochain& lambda = out.lambdas[n];
    alpha = Cochain(2, 0, da, dl, da);
    mu = Cochain(1, 1, da, dl, da);
    lambda = Cochain(0, 2, da, dl, dl);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; j + k <= n; ++k)
        for (int l = 0; j + k + l <= n; ++l) {
          const int i = n - j - k - l;
          for (std::size_t a = 0; a < da; ++a)
            for (std::size_t b = 0; b < da; ++b) {
              const Vector inner = c.alpha(j, P[k].column(a), P[l].column(b));
              if (!is_zero(inner)) add_to(alpha.value({a, b}), Pinv[i] * inner, +1);
            }
          for (std::size_t x = 0; x < dl; ++x)
            for (std::size_t a = 0; a < da; ++a) {
              const Vector inner = c.mu(j, Q[k].column(x), P[l].column(a));
              if (!is_zero(inner)) add_to(mu.value({a, x}), Pinv[i] * inner, +1);
            }
          for (std::size_t x = 0; x < dl; ++x)
            for (std::size_t y = 0; y < dl; ++y) {
              const Vector inner = c.lambda(j, Q[k].column(x), Q[l].column(y));
              if (!is_zero(inner)) add_to(lambda.value({x, y}), Qinv[i] * inner, +1);
            }
        }
  }
  return out;
}

Equivalence identity_equivalence(const CourantPair& pair, int order) {
  Equivalence e;
  for (int k = 1; k <= order; ++k) {
    e.phis.emplace_back(1, 0, pair.a_dim(), pair.l_dim(), pair.a_dim());
    e.psis.emplace_back(0, 1, pair.a_dim(), pair.l_dim(), pair.l_dim());
  }
  return e;
}

Equivalence inverse(const Equivalence& e, const CourantPair& pair, int order) {
  check_equivalence_shapes(e, pair);
  const auto Pinv = inverse_series(series(e.phis, pair.a_dim(), order));
  const auto Qinv = inverse_series(series(e.psis, pair.l_dim(), order));
  Equivalence out;
  for (int k = 1; k <= order; ++k) {
    out.phis.push_back(as_cochain(Pinv[k], true, pair));
    out.psis.push_back(as_cochain(Qinv[k], false, pair));
  }
  return out;
}

namespace {

void require_same_pair(const Deformation& d1, const Deformation& d2) {
  if (d1.order() < 1 || d2.order() < 1) throw InputError("deformations must have order >= 1");
  if (!(d1.alphas[0] == d2.alphas[0] && d1.mus[0] == d2.mus[0] && d1.lambdas[0] == d2.lambdas[0]))
    throw InputError("deformations are not deformations of the same pair");
}

}  // namespace

std::optional<FirstOrderEquivalence> equivalent_infinitesimals_differ_by_coboundary(const Deformation& d1,
                                                                                   const Deformation& d2) {
  require_same_pair(d1, d2);
  const Bicomplex bc = Bicomplex::adjoint(d1.pair);
  const TotalCochain target = structure_twist(infinitesimal(d2) - infinitesimal(d1));
  auto y = coboundary_preimage(target, bc);
  if (!y) return std::nullopt;
  return FirstOrderEquivalence{y->component(1), -y->component(0)};
}

bool first_order_identities_hold(const Deformation& d1, const Deformation& d2, const Cochain& phi1,
                                 const Cochain& psi1) {
  require_same_pair(d1, d2);
  const Bicomplex bc = Bicomplex::adjoint(d1.pair);
  const TotalCochain expected({hochschild_delta(phi1, bc), leibniz_delta(phi1, bc) + vertical_delta(psi1, bc),
                               leibniz_delta(psi1, bc)});
  return infinitesimal(d2) - infinitesimal(d1) == expected;
}

TotalCochain Obstruction::total() const { return TotalCochain({theta_a, theta1, theta2, theta_l}); }

Obstruction obstruction(const Deformation& d) {
  const DeformationReport report = validate_deformation(d);
  if (const auto* bad = report.first_failure())
    throw InvalidDeformationError("deformation fails " + bad->equation + " at order " + std::to_string(bad->order));
  return quadratic_terms(d, d.order() + 1, 1);
}

Cochain half_bracket_sum(const Deformation& d) {
  const int n = d.order() + 1;
  Cochain sum(3, 0, d.pair.a_dim(), d.pair.l_dim(), d.pair.a_dim());
  for (int i = 1; i < n; ++i) sum += gerstenhaber_bracket(d.alphas[i], d.alphas[n - i]);
  sum *= Scalar(1, 2);
  return sum;
}

ObstructionCheck check_obstruction(const Obstruction& t, const Bicomplex& bc) {
  ObstructionCheck c;
  c.hochschild_closed = hochschild_delta(t.theta_a, bc).is_zero();
  c.mixed_a = (hochschild_delta(t.theta1, bc) - leibniz_delta(t.theta_a, bc)).is_zero();
  c.mixed_b = (hochschild_delta(t.theta2, bc) + leibniz_delta(t.theta1, bc)).is_zero();
  c.mixed_c = (vertical_delta(t.theta_l, bc) - leibniz_delta(t.theta2, bc)).is_zero();
  c.leibniz_closed = leibniz_delta(t.theta_l, bc).is_zero();
  return c;
}

bool obstruction_is_cocycle(const Deformation& d) {
  const Bicomplex bc = Bicomplex::adjoint(d.pair);
  return is_cocycle(obstruction(d).total(), bc);
}

namespace {

std::optional<Deformation> extend_with(const Deformation& d, const Obstruction& theta, const Bicomplex& bc) {
  const TotalCochain target = -theta.total();
  TotalCochain y = TotalCochain::zero(bc, 2);
  if (!target.is_zero()) {
    auto pre = coboundary_preimage(target, bc);
    if (!pre) return std::nullopt;
    y = std::move(*pre);
  }
  const TotalCochain s = structure_twist(y);
  Deformation out = d;
  out.set_coefficient(d.order() + 1, s.component(2), s.component(1), s.component(0));
  return out;
}

}  // namespace

std::optional<Deformation> extend(const Deformation& d) {
  const Bicomplex bc = Bicomplex::adjoint(d.pair);
  return extend_with(d, obstruction(d), bc);
}

ExtensionResult extend_to(const Deformation& d, int target_order) {
  const Bicomplex bc = Bicomplex::adjoint(d.pair);
  ExtensionResult r{d, false, std::nullopt};
  while (r.deformation.order() < target_order) {
    Obstruction theta = obstruction(r.deformation);
    auto next = extend_with(r.deformation, theta, bc);
    if (!next) {
      r.blocking = std::move(theta);
      return r;
    }
    r.deformation = std::move(*next);
  }
  r.complete = true;
  return r;
}

RigidityReport rigidity_probe(const CourantPair& pair) {
  const Bicomplex bc = Bicomplex::adjoint(pair);
  CohomologyOptions options;
  options.representatives = true;
  options.force = true;
  const CohomologyResult h = compute_cohomology(2, bc, Column::Total, options);
  RigidityReport r;
  r.hl2_dim = h.dim;
  r.rigid = h.dim == 0;
  for (const Vector& v : h.representatives) r.representatives.push_back(TotalCochain::from_coordinates(bc, 2, v));
  return r;
}

}  // namespace cpair
