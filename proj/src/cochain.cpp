#include "cpair/cochain.hpp"

#include <algorithm>

#include "cpair/errors.hpp"

namespace cpair {

namespace {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void decode(std::size_t index, std::size_t base, std::size_t len, std::vector<std::size_t>& out) {
  out.assign(len, 0);
  for (std::size_t k = len; k > 0; --k) {
    out[k - 1] = index % base;
    index /= base;
  }
}

std::size_t encode(const std::vector<std::size_t>& digits, std::size_t base) {
  std::size_t r = 0;
  for (std::size_t d : digits) r = r * base + d;
  return r;
}

void add_scaled(std::span<Scalar> out, std::span<const Scalar> in, const Scalar& scale) {
  for (std::size_t k = 0; k < in.size(); ++k)
    if (sgn(in[k]) != 0) out[k] += scale * in[k];
}

struct Term {
  std::size_t i;
  std::size_t j;
  Scalar c;
};

// For each output basis index s, the pairs (i, j) with coefficient c = (e_i . e_j)_s != 0.
std::vector<std::vector<Term>> preimages(const Bilinear& b) {
  std::vector<std::vector<Term>> out(b.out_dim());
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t j = 0; j < b.right_dim(); ++j)
      for (std::size_t s = 0; s < b.out_dim(); ++s)
        if (sgn(b.at(i, j, s)) != 0) out[s].push_back({i, j, b.at(i, j, s)});
  return out;
}

// Adds scale * [x, f] into out, where f is a slice in C^p(A, M) (or P for p = 0).
void act_slice(const Bicomplex& bc, std::size_t x, int p, std::span<const Scalar> in, const Scalar& scale,
               std::span<Scalar> out) {
  const CPModule& mod = bc.module();
  if (p == 0) {
    mod.p_left.accumulate_left(x, in, scale, out);
    return;
  }
  const std::size_t da = bc.a_dim(), dm = bc.m_dim();
  const std::size_t count = ipow(da, p);
  const Bilinear& mu = bc.anchor();
  std::vector<std::size_t> digits;
  for (std::size_t t = 0; t < count; ++t) {
    std::span<const Scalar> v = in.subspan(t * dm, dm);
    if (is_zero(v)) continue;
    mod.m_left.accumulate_left(x, v, scale, out.subspan(t * dm, dm));
    decode(t, da, p, digits);
    for (int i = 0; i < p; ++i) {
      const std::size_t s = digits[i];
      const std::size_t stride = ipow(da, p - 1 - i);
      for (std::size_t a = 0; a < da; ++a) {
        const Scalar& c = mu.at(x, a, s);
        if (sgn(c) == 0) continue;
        const std::size_t target = t + (a - s) * stride;  // unsigned wraparound cancels
        add_scaled(out.subspan(target * dm, dm), v, -scale * c);
      }
    }
  }
}

// Adds scale * [f, x] into out.
void right_act_slice(const Bicomplex& bc, std::size_t x, int p, std::span<const Scalar> in, const Scalar& scale,
                     std::span<Scalar> out) {
  if (p == 0) {
    bc.module().p_right.accumulate_right(in, x, scale, out);
    return;
  }
  act_slice(bc, x, p, in, -scale, out);
}

void require_context(const Cochain& f, const Bicomplex& bc) {
  if (f.a_dim() != bc.a_dim() || f.l_dim() != bc.l_dim() || f.out_dim() != bc.out_dim(f.p()))
    throw InputError("cochain dimensions do not match the bicomplex");
}

}  // namespace

Bicomplex::Bicomplex(CourantPair pair, CPModule module) : pair_(std::move(pair)), module_(std::move(module)) {
  check_shapes(pair_, module_);
  mu_ = pair_.anchor_action();
}

Bicomplex Bicomplex::adjoint(CourantPair pair) {
  CPModule mod = adjoint_module(pair);
  return Bicomplex(std::move(pair), std::move(mod));
}

Cochain::Cochain(int p, int q, std::size_t a_dim, std::size_t l_dim, std::size_t out_dim)
    : p_(p), q_(q), a_dim_(a_dim), l_dim_(l_dim), out_dim_(out_dim) {
  if (p < 0 || q < 0) throw InputError("negative cochain bidegree");
  a_count_ = ipow(a_dim, p);
  l_count_ = ipow(l_dim, q);
  values_.assign(a_count_ * l_count_ * out_dim, Scalar(0));
}

Cochain Cochain::zero(const Bicomplex& bc, int p, int q) { return Cochain(p, q, bc.a_dim(), bc.l_dim(), bc.out_dim(p)); }

std::size_t Cochain::offset(std::span<const std::size_t> args) const {
  if (args.size() != static_cast<std::size_t>(p_ + q_)) throw InputError("wrong number of cochain arguments");
  std::size_t a = 0, l = 0;
  for (int i = 0; i < p_; ++i) {
    if (args[i] >= a_dim_) throw InputError("A-argument index out of range");
    a = a * a_dim_ + args[i];
  }
  for (int i = 0; i < q_; ++i) {
    if (args[p_ + i] >= l_dim_) throw InputError("L-argument index out of range");
    l = l * l_dim_ + args[p_ + i];
  }
  return (l * a_count_ + a) * out_dim_;
}

std::span<const Scalar> Cochain::value(std::span<const std::size_t> args) const {
  return {values_.data() + offset(args), out_dim_};
}

std::span<Scalar> Cochain::value(std::span<const std::size_t> args) { return {values_.data() + offset(args), out_dim_}; }

Scalar& Cochain::at(std::initializer_list<std::size_t> args, std::size_t k) {
  if (k >= out_dim_) throw InputError("output index out of range");
  return values_[offset(std::span<const std::size_t>(args.begin(), args.size())) + k];
}

bool Cochain::is_zero() const { return cpair::is_zero(values_); }

bool Cochain::same_shape(const Cochain& o) const {
  return p_ == o.p_ && q_ == o.q_ && a_dim_ == o.a_dim_ && l_dim_ == o.l_dim_ && out_dim_ == o.out_dim_;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (!same_shape(other)) throw InputError("adding cochains of different shapes");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (!same_shape(other)) throw InputError("subtracting cochains of different shapes");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

Vector evaluate(const Cochain& f, std::span<const Vector> args) {
  const std::size_t n = static_cast<std::size_t>(f.p() + f.q());
  if (args.size() != n) throw InputError("wrong number of arguments to evaluate");
  std::vector<std::vector<std::size_t>> support(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t dim = static_cast<int>(i) < f.p() ? f.a_dim() : f.l_dim();
    if (args[i].size() != dim) throw InputError("argument vector has the wrong length");
    for (std::size_t j = 0; j < dim; ++j)
      if (sgn(args[i][j]) != 0) support[i].push_back(j);
  }
  Vector out(f.out_dim());
  std::vector<std::size_t> idx(n);
  auto recurse = [&](auto&& self, std::size_t k, const Scalar& coeff) -> void {
    if (k == n) {
      add_scaled(out, f.value(idx), coeff);
      return;
    }
    for (std::size_t j : support[k]) {
      idx[k] = j;
      self(self, k + 1, coeff * args[k][j]);
    }
  };
  recurse(recurse, 0, Scalar(1));
  return out;
}

TotalCochain::TotalCochain(std::vector<Cochain> components) : components_(std::move(components)) {
  if (components_.empty()) throw InputError("total cochain needs at least one component");
  degree_ = components_.front().p() + components_.front().q();
  if (components_.size() != static_cast<std::size_t>(degree_ + 1))
    throw InputError("total cochain of degree n needs n + 1 components");
  for (int k = 0; k <= degree_; ++k) {
    const Cochain& c = components_[k];
    if (c.p() != degree_ - k || c.q() != k) throw InputError("total cochain components must be ordered by p descending");
    if (c.a_dim() != components_[0].a_dim() || c.l_dim() != components_[0].l_dim())
      throw InputError("total cochain components disagree on dimensions");
  }
}

TotalCochain TotalCochain::zero(const Bicomplex& bc, int degree) {
  if (degree < 0) throw InputError("negative degree");
  std::vector<Cochain> parts;
  for (int p = degree; p >= 0; --p) parts.push_back(Cochain::zero(bc, p, degree - p));
  return TotalCochain(std::move(parts));
}

TotalCochain TotalCochain::from_coordinates(const Bicomplex& bc, int degree, std::span<const Scalar> coordinates) {
  TotalCochain t = zero(bc, degree);
  if (coordinates.size() != t.size()) throw InputError("coordinate vector has the wrong length");
  std::size_t pos = 0;
  for (auto& c : t.components_) {
    std::copy(coordinates.begin() + pos, coordinates.begin() + pos + c.size(), c.coefficients().begin());
    pos += c.size();
  }
  return t;
}

const Cochain& TotalCochain::component(int p) const {
  if (p < 0 || p > degree_) throw InputError("component index out of range");
  return components_[degree_ - p];
}

Cochain& TotalCochain::component(int p) {
  if (p < 0 || p > degree_) throw InputError("component index out of range");
  return components_[degree_ - p];
}

Vector TotalCochain::coordinates() const {
  Vector out;
  out.reserve(size());
  for (const auto& c : components_) out.insert(out.end(), c.coefficients().begin(), c.coefficients().end());
  return out;
}

std::size_t TotalCochain::size() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

bool TotalCochain::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Cochain& c) { return c.is_zero(); });
}

TotalCochain& TotalCochain::operator+=(const TotalCochain& other) {
  if (degree_ != other.degree_ || components_.size() != other.components_.size())
    throw InputError("adding total cochains of different degrees");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += other.components_[k];
  return *this;
}

TotalCochain& TotalCochain::operator-=(const TotalCochain& other) {
  if (degree_ != other.degree_ || components_.size() != other.components_.size())
    throw InputError("subtracting total cochains of different degrees");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] -= other.components_[k];
  return *this;
}

TotalCochain& TotalCochain::operator*=(const Scalar& s) {
  for (auto& c : components_) c *= s;
  return *this;
}

TotalCochain TotalCochain::operator-() const {
  TotalCochain r = *this;
  r *= Scalar(-1);
  return r;
}

Cochain hochschild_delta(const Cochain& f, const Bicomplex& bc) {
  if (f.p() < 1) throw WrongDifferentialError("Hochschild differential needs p >= 1; use the vertical map on column 0");
  require_context(f, bc);
  const int p = f.p();
  const std::size_t da = bc.a_dim(), dm = bc.m_dim();
  const CPModule& mod = bc.module();
  const auto mul_pre = preimages(bc.pair().algebra.mul);
  Cochain out = Cochain::zero(bc, p + 1, f.q());
  const std::size_t count = f.a_count();
  const Scalar last_sign = (p + 1) % 2 == 0 ? 1 : -1;
  std::vector<std::size_t> b;
  for (std::size_t l = 0; l < f.l_count(); ++l) {
    std::span<const Scalar> in = f.slice(l);
    std::span<Scalar> dst = out.slice(l);
    for (std::size_t t = 0; t < count; ++t) {
      std::span<const Scalar> v = in.subspan(t * dm, dm);
      if (is_zero(v)) continue;
      for (std::size_t a = 0; a < da; ++a) {
        mod.a_left.accumulate_left(a, v, 1, dst.subspan((a * count + t) * dm, dm));
        mod.a_right.accumulate_right(v, a, last_sign, dst.subspan((t * da + a) * dm, dm));
      }
      decode(t, da, p, b);
      for (int i = 1; i <= p; ++i) {
        const std::size_t s = b[i - 1];
        const std::size_t suffix_len = p - i;
        const std::size_t suffix_count = ipow(da, static_cast<int>(suffix_len));
        const std::size_t prefix = t / (suffix_count * da);
        const std::size_t suffix = t % suffix_count;
        const Scalar sign = i % 2 == 0 ? 1 : -1;
        for (const Term& term : mul_pre[s]) {
          const std::size_t target = ((prefix * da + term.i) * da + term.j) * suffix_count + suffix;
          add_scaled(dst.subspan(target * dm, dm), v, sign * term.c);
        }
      }
    }
  }
  return out;
}

Cochain module_action(std::size_t x, const Cochain& f, const Bicomplex& bc) {
  require_context(f, bc);
  if (x >= bc.l_dim()) throw InputError("L basis index out of range");
  Cochain out = Cochain::zero(bc, f.p(), f.q());
  for (std::size_t l = 0; l < f.l_count(); ++l) act_slice(bc, x, f.p(), f.slice(l), 1, out.slice(l));
  return out;
}

Cochain leibniz_delta(const Cochain& f, const Bicomplex& bc) {
  require_context(f, bc);
  const int p = f.p(), q = f.q();
  const std::size_t dl = bc.l_dim();
  const auto br_pre = preimages(bc.pair().leibniz.bracket);
  Cochain out = Cochain::zero(bc, p, q + 1);
  const Scalar right_sign = (q + 1) % 2 == 0 ? 1 : -1;
  std::vector<std::size_t> y, z;
  for (std::size_t yi = 0; yi < f.l_count(); ++yi) {
    std::span<const Scalar> in = f.slice(yi);
    if (is_zero(in)) continue;
    decode(yi, dl, q, y);
    // sum_{i=1}^{q} (-1)^{i-1} [X_i, f(.. X_i omitted ..)]
    for (int i = 1; i <= q; ++i) {
      const Scalar sign = (i - 1) % 2 == 0 ? 1 : -1;
      for (std::size_t x = 0; x < dl; ++x) {
        z = y;
        z.insert(z.begin() + (i - 1), x);
        act_slice(bc, x, p, in, sign, out.slice(encode(z, dl)));
      }
    }
    // (-1)^{q+1} [f(X_1..X_q), X_{q+1}]
    for (std::size_t x = 0; x < dl; ++x) right_act_slice(bc, x, p, in, right_sign, out.slice(yi * dl + x));
    // sum_{i<j} (-1)^i f(.. X_i omitted .., [X_i, X_j], ..)
    for (int k = 1; k <= q; ++k) {
      for (const Term& term : br_pre[y[k - 1]]) {
        for (int i = 1; i <= k; ++i) {
          z = y;
          z[k - 1] = term.j;
          z.insert(z.begin() + (i - 1), term.i);
          const Scalar coeff = i % 2 == 0 ? term.c : Scalar(-term.c);
          add_scaled(out.slice(encode(z, dl)), in, coeff);
        }
      }
    }
  }
  return out;
}

Cochain vertical_delta(const Cochain& psi, const Bicomplex& bc) {
  if (psi.p() != 0) throw WrongDifferentialError("vertical map is defined on column p = 0 only");
  require_context(psi, bc);
  const std::size_t da = bc.a_dim(), dm = bc.m_dim();
  Cochain out = Cochain::zero(bc, 1, psi.q());
  for (std::size_t l = 0; l < psi.l_count(); ++l) {
    std::span<const Scalar> v = psi.slice(l);
    if (is_zero(v)) continue;
    std::span<Scalar> dst = out.slice(l);
    for (std::size_t a = 0; a < da; ++a) bc.module().phi.accumulate_right(v, a, 1, dst.subspan(a * dm, dm));
  }
  return out;
}

TotalCochain total_delta(const TotalCochain& c, const Bicomplex& bc) {
  TotalCochain out = TotalCochain::zero(bc, c.degree() + 1);
  for (const Cochain& part : c.components()) {
    if (part.is_zero()) continue;
    if (part.p() == 0) {
      out.component(1) += vertical_delta(part, bc);
      out.component(0) += leibniz_delta(part, bc);
    } else {
      out.component(part.p() + 1) += hochschild_delta(part, bc);
      Cochain dl = leibniz_delta(part, bc);
      if (part.p() % 2 == 1) dl *= Scalar(-1);
      out.component(part.p()) += dl;
    }
  }
  return out;
}

Cochain circle(const Cochain& f, const Cochain& g) {
  if (f.q() != 0 || g.q() != 0) throw NotComposableError("circle product is defined on Hochschild cochains (q = 0)");
  if (f.p() < 1 || g.p() < 1) throw NotComposableError("circle product needs p >= 1 and q >= 1");
  if (f.a_dim() != g.a_dim() || g.out_dim() != g.a_dim())
    throw NotComposableError("inner cochain must take values in A");
  const int p = f.p(), q = g.p();
  const std::size_t da = f.a_dim();
  Cochain out(p + q - 1, 0, da, f.l_dim(), f.out_dim());
  std::vector<std::size_t> a, fa(p), ga(q);
  for (std::size_t t = 0; t < out.a_count(); ++t) {
    decode(t, da, p + q - 1, a);
    std::span<Scalar> dst = out.value(a);
    for (int i = 0; i < p; ++i) {
      std::copy(a.begin() + i, a.begin() + i + q, ga.begin());
      std::span<const Scalar> w = g.value(ga);
      const Scalar sign = (i * (q + 1)) % 2 == 0 ? 1 : -1;
      for (std::size_t s = 0; s < da; ++s) {
        if (sgn(w[s]) == 0) continue;
        std::copy(a.begin(), a.begin() + i, fa.begin());
        fa[i] = s;
        std::copy(a.begin() + i + q, a.end(), fa.begin() + i + 1);
        add_scaled(dst, f.value(fa), sign * w[s]);
      }
    }
  }
  return out;
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
  if (f.out_dim() != f.a_dim()) throw NotComposableError("bracket needs both cochains to take values in A");
  Cochain out = circle(f, g);
  Cochain back = circle(g, f);
  if ((f.p() - 1) * (g.p() - 1) % 2 == 0) out -= back;
  else out += back;
  return out;
}

Cochain curry_mu(const Cochain& mu_i, std::size_t x) {
  if (mu_i.p() != 1 || mu_i.q() != 1) throw InputError("curry_mu expects a (1,1)-cochain");
  if (x >= mu_i.l_dim()) throw InputError("L basis index out of range");
  Cochain out(1, 0, mu_i.a_dim(), mu_i.l_dim(), mu_i.out_dim());
  std::span<const Scalar> s = mu_i.slice(x);
  std::copy(s.begin(), s.end(), out.coefficients().begin());
  return out;
}

TotalCochain structure_twist(const TotalCochain& c) {
  TotalCochain out = c;
  for (int p = 0; p < c.degree(); ++p) out.component(p) *= Scalar(-1);
  return out;
}

}  // namespace cpair
