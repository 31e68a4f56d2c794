#include "cpair/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "cpair/errors.hpp"

namespace cpair {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw ParseError(path, message); }

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field \"" + key + "\"");
  return *it;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key())) fail(child(path, it.key()), "unknown field");
}

Scalar parse_rational(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const InputError& e) {
      fail(path, e.what());
    }
  }
  if (v.is_number_integer()) return Scalar(v.dump(), 10);
  if (v.is_number_float()) fail(path, "floating-point numbers are not accepted; write exact rationals as \"p/q\"");
  fail(path, "expected a rational string");
}

std::size_t parse_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

using Labels = std::vector<std::string>;

std::size_t parse_index(const json& v, const Labels& labels, const std::string& path) {
  if (v.is_number_integer()) {
    const long long i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size())
      fail(path, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(labels.size()) + ")");
    return static_cast<std::size_t>(i);
  }
  if (v.is_string()) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == v.get<std::string>()) return i;
    fail(path, "unknown basis label \"" + v.get<std::string>() + "\"");
  }
  fail(path, "expected a basis index or label");
}

Vector parse_vector(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array()) fail(path, "expected a coefficient vector");
  if (v.size() != n)
    fail(path, "coefficient vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(parse_rational(v[i], child(path, i)));
  return out;
}

Labels parse_space(const json& v, const std::string& path, const std::string& prefix) {
  check_keys(v, {"dim", "basis", "table"}, path);
  const std::size_t dim = parse_count(field(v, "dim", path), child(path, "dim"));
  Labels labels;
  if (auto it = v.find("basis"); it != v.end()) {
    if (!it->is_array() || it->size() != dim) fail(child(path, "basis"), "basis must list dim labels");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < dim; ++i) {
      const json& l = (*it)[i];
      if (!l.is_string() || l.get<std::string>().empty()) fail(child(child(path, "basis"), i), "label must be a non-empty string");
      if (!seen.insert(l.get<std::string>()).second) fail(child(child(path, "basis"), i), "duplicate label");
      labels.push_back(l.get<std::string>());
    }
  } else {
    labels = default_labels(prefix, dim);
  }
  return labels;
}

// Sparse table of [i, j, coeffs] entries; omitted entries are zero.
Bilinear parse_table(const json* table, const Labels& left, const Labels& right, std::size_t out_dim,
                     const std::string& path) {
  Bilinear b(left.size(), right.size(), out_dim);
  if (table == nullptr || table->is_null()) return b;
  if (!table->is_array()) fail(path, "expected a list of [i, j, coefficients] entries");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < table->size(); ++e) {
    const json& entry = (*table)[e];
    const std::string at = child(path, e);
    if (!entry.is_array() || entry.size() != 3) fail(at, "entry must be [i, j, coefficients]");
    const std::size_t i = parse_index(entry[0], left, child(at, 0));
    const std::size_t j = parse_index(entry[1], right, child(at, 1));
    if (!seen.insert({i, j}).second) fail(at, "duplicate entry");
    const Vector v = parse_vector(entry[2], out_dim, child(at, 2));
    for (std::size_t k = 0; k < out_dim; ++k) b.at(i, j, k) = v[k];
  }
  return b;
}

const json* optional_field(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void check_field_tag(const json& doc, const std::string& path, bool required) {
  const json* tag = optional_field(doc, "field");
  if (tag == nullptr) {
    if (required) fail(path, "missing field \"field\" (must be \"Q\")");
    return;
  }
  if (!tag->is_string() || tag->get<std::string>() != "Q") fail(child(path, "field"), "only the field \"Q\" is supported");
}

PairDocument parse_pair_at(const json& doc, const std::string& path) {
  check_keys(doc, {"field", "name", "notes", "assoc", "leibniz", "mu", "module"}, path);
  check_field_tag(doc, path, true);
  PairDocument out;
  CourantPair& pair = out.pair;
  const json& assoc = field(doc, "assoc", path);
  pair.algebra.labels = parse_space(assoc, child(path, "assoc"), "a");
  const std::size_t n = pair.algebra.dim();
  pair.algebra.mul = parse_table(optional_field(assoc, "table"), pair.algebra.labels, pair.algebra.labels, n,
                                 child(child(path, "assoc"), "table"));
  if (const json* lb = optional_field(doc, "leibniz")) {
    pair.leibniz.labels = parse_space(*lb, child(path, "leibniz"), "e");
  }
  const std::size_t m = pair.leibniz.dim();
  const json* lb = optional_field(doc, "leibniz");
  pair.leibniz.bracket = parse_table(lb ? optional_field(*lb, "table") : nullptr, pair.leibniz.labels,
                                     pair.leibniz.labels, m, child(child(path, "leibniz"), "table"));
  pair.anchor.assign(m, Derivation{Matrix(n, n)});
  if (const json* mu = optional_field(doc, "mu"); mu != nullptr && !mu->is_null()) {
    const std::string mpath = child(path, "mu");
    if (!mu->is_array() || mu->size() != m) fail(mpath, "mu must list one matrix (or null) per basis element of L");
    for (std::size_t x = 0; x < m; ++x) {
      const json& mat = (*mu)[x];
      const std::string xp = child(mpath, x);
      if (mat.is_null()) continue;
      if (!mat.is_array() || mat.size() != n) fail(xp, "expected a dim(A) x dim(A) matrix (rows are outputs)");
      for (std::size_t r = 0; r < n; ++r) {
        const Vector row = parse_vector(mat[r], n, child(xp, r));
        for (std::size_t c = 0; c < n; ++c) pair.anchor[x].matrix(r, c) = row[c];
      }
    }
  }
  if (const json* mod = optional_field(doc, "module"); mod != nullptr && !mod->is_null()) {
    const std::string mp = child(path, "module");
    check_keys(*mod, {"M", "P", "actions", "phi"}, mp);
    CPModule module;
    module.m_labels = parse_space(field(*mod, "M", mp), child(mp, "M"), "m");
    module.p_labels = parse_space(field(*mod, "P", mp), child(mp, "P"), "p");
    const json empty = json::object();
    const json* actions = optional_field(*mod, "actions");
    if (actions == nullptr) actions = &empty;
    const std::string ap = child(mp, "actions");
    check_keys(*actions, {"A_left", "A_right", "L_left_M", "L_right_M", "L_left_P", "L_right_P"}, ap);
    const Labels& A = pair.algebra.labels;
    const Labels& L = pair.leibniz.labels;
    const Labels& M = module.m_labels;
    const Labels& P = module.p_labels;
    module.a_left = parse_table(optional_field(*actions, "A_left"), A, M, M.size(), child(ap, "A_left"));
    module.a_right = parse_table(optional_field(*actions, "A_right"), M, A, M.size(), child(ap, "A_right"));
    module.m_left = parse_table(optional_field(*actions, "L_left_M"), L, M, M.size(), child(ap, "L_left_M"));
    module.m_right = parse_table(optional_field(*actions, "L_right_M"), M, L, M.size(), child(ap, "L_right_M"));
    module.p_left = parse_table(optional_field(*actions, "L_left_P"), L, P, P.size(), child(ap, "L_left_P"));
    module.p_right = parse_table(optional_field(*actions, "L_right_P"), P, L, P.size(), child(ap, "L_right_P"));
    module.phi = parse_table(optional_field(*mod, "phi"), P, A, M.size(), child(mp, "phi"));
    out.module = std::move(module);
  }
  return out;
}

// Entries [in_1, ..., in_k, coefficients] of a deformation coefficient.
Cochain parse_coefficient(const json* entries, int p, int q, const CourantPair& pair, std::size_t out_dim,
                          const std::string& path) {
  Cochain c(p, q, pair.a_dim(), pair.l_dim(), out_dim);
  if (entries == nullptr || entries->is_null()) return c;
  if (!entries->is_array()) fail(path, "expected a list of entries");
  const std::size_t k = static_cast<std::size_t>(p + q);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < entries->size(); ++e) {
    const json& entry = (*entries)[e];
    const std::string at = child(path, e);
    if (!entry.is_array() || entry.size() != k + 1)
      fail(at, "entry must list " + std::to_string(k) + " basis elements and a coefficient vector");
    // L-arguments are written first (mu entries are [x, a, coeffs]).
    std::vector<std::size_t> args(k);
    for (int i = 0; i < q; ++i) args[p + i] = parse_index(entry[i], pair.leibniz.labels, child(at, i));
    for (int i = 0; i < p; ++i) args[i] = parse_index(entry[q + i], pair.algebra.labels, child(at, q + i));
    if (!seen.insert(args).second) fail(at, "duplicate entry");
    const Vector v = parse_vector(entry[k], out_dim, child(at, k));
    std::copy(v.begin(), v.end(), c.value(args).begin());
  }
  return c;
}

json rational(const Scalar& s) { return to_string(s); }

json vector_json(std::span<const Scalar> v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(rational(s));
  return out;
}

json table_json(const Bilinear& b, const Labels& left, const Labels& right) {
  json out = json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t j = 0; j < b.right_dim(); ++j)
      if (!is_zero(b(i, j))) out.push_back(json::array({left[i], right[j], vector_json(b(i, j))}));
  return out;
}

json space_json(const Labels& labels) { return {{"dim", labels.size()}, {"basis", labels}}; }

// Entries of a cochain with L-arguments written first.
json entries_json(const Cochain& c, const CourantPair& pair) {
  json out = json::array();
  const std::size_t k = static_cast<std::size_t>(c.p() + c.q());
  std::vector<std::size_t> args(k);
  for (std::size_t l = 0; l < c.l_count(); ++l)
    for (std::size_t a = 0; a < c.a_count(); ++a) {
      std::size_t li = l, ai = a;
      for (int i = c.q() - 1; i >= 0; --i) {
        args[c.p() + i] = li % c.l_dim();
        li /= c.l_dim();
      }
      for (int i = c.p() - 1; i >= 0; --i) {
        args[i] = ai % c.a_dim();
        ai /= c.a_dim();
      }
      auto v = c.value(args);
      if (is_zero(v)) continue;
      json entry = json::array();
      for (int i = 0; i < c.q(); ++i) entry.push_back(pair.leibniz.labels[args[c.p() + i]]);
      for (int i = 0; i < c.p(); ++i) entry.push_back(pair.algebra.labels[args[i]]);
      entry.push_back(vector_json(v));
      out.push_back(std::move(entry));
    }
  return out;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), std::string("malformed JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

bool is_deformation_document(const json& doc) {
  return doc.is_object() && (doc.contains("coefficients") || doc.contains("order") || doc.contains("pair"));
}

PairDocument parse_pair_document(const json& doc) { return parse_pair_at(doc, ""); }

DeformationDocument parse_deformation_document(const json& doc) {
  check_keys(doc, {"field", "name", "notes", "pair", "order", "coefficients"}, "");
  check_field_tag(doc, "", false);
  std::optional<std::string> catalog_name;
  const json& pj = field(doc, "pair", "");
  CourantPair pair;
  if (pj.is_object() && pj.contains("catalog")) {
    check_keys(pj, {"catalog"}, "/pair");
    if (!pj["catalog"].is_string()) fail("/pair/catalog", "expected a catalog name");
    try {
      pair = catalog_entry(pj["catalog"].get<std::string>()).pair;
    } catch (const InputError& e) {
      fail("/pair/catalog", e.what());
    }
    catalog_name = pj["catalog"].get<std::string>();
  } else {
    pair = parse_pair_at(pj, "/pair").pair;
  }
  const std::size_t order = parse_count(field(doc, "order", ""), "/order");
  Deformation d(pair, static_cast<int>(order));
  std::set<std::size_t> seen;
  if (const json* coeffs = optional_field(doc, "coefficients"); coeffs != nullptr && !coeffs->is_null()) {
    if (!coeffs->is_array()) fail("/coefficients", "expected a list");
    for (std::size_t e = 0; e < coeffs->size(); ++e) {
      const json& c = (*coeffs)[e];
      const std::string at = child("/coefficients", e);
      check_keys(c, {"order", "alpha", "mu", "lambda"}, at);
      const std::size_t i = parse_count(field(c, "order", at), child(at, "order"));
      if (i < 1 || i > order) fail(child(at, "order"), "coefficient order must lie in 1..order");
      if (!seen.insert(i).second) fail(child(at, "order"), "duplicate coefficient order");
      d.alphas[i] = parse_coefficient(optional_field(c, "alpha"), 2, 0, pair, pair.a_dim(), child(at, "alpha"));
      d.mus[i] = parse_coefficient(optional_field(c, "mu"), 1, 1, pair, pair.a_dim(), child(at, "mu"));
      d.lambdas[i] = parse_coefficient(optional_field(c, "lambda"), 0, 2, pair, pair.l_dim(), child(at, "lambda"));
    }
  }
  return DeformationDocument{std::move(d), std::move(catalog_name)};
}

json export_pair(const CourantPair& pair, const CPModule* module) {
  json doc;
  doc["field"] = "Q";
  doc["assoc"] = space_json(pair.algebra.labels);
  doc["assoc"]["table"] = table_json(pair.algebra.mul, pair.algebra.labels, pair.algebra.labels);
  doc["leibniz"] = space_json(pair.leibniz.labels);
  doc["leibniz"]["table"] = table_json(pair.leibniz.bracket, pair.leibniz.labels, pair.leibniz.labels);
  json mu = json::array();
  for (const auto& d : pair.anchor) {
    if (d.matrix.is_zero()) {
      mu.push_back(nullptr);
      continue;
    }
    json rows = json::array();
    for (std::size_t r = 0; r < d.matrix.rows(); ++r) rows.push_back(vector_json(d.matrix.row(r)));
    mu.push_back(std::move(rows));
  }
  doc["mu"] = std::move(mu);
  if (module != nullptr) {
    const Labels& A = pair.algebra.labels;
    const Labels& L = pair.leibniz.labels;
    const Labels& M = module->m_labels;
    const Labels& P = module->p_labels;
    json m;
    m["M"] = space_json(M);
    m["P"] = space_json(P);
    m["actions"] = {{"A_left", table_json(module->a_left, A, M)},      {"A_right", table_json(module->a_right, M, A)},
                    {"L_left_M", table_json(module->m_left, L, M)},    {"L_right_M", table_json(module->m_right, M, L)},
                    {"L_left_P", table_json(module->p_left, L, P)},    {"L_right_P", table_json(module->p_right, P, L)}};
    m["phi"] = table_json(module->phi, P, A);
    doc["module"] = std::move(m);
  }
  return doc;
}

json export_deformation(const Deformation& d, const std::optional<std::string>& catalog_name) {
  json doc;
  doc["field"] = "Q";
  if (catalog_name) doc["pair"] = {{"catalog", *catalog_name}};
  else doc["pair"] = export_pair(d.pair);
  doc["order"] = d.order();
  json coeffs = json::array();
  for (int i = 1; i <= d.order(); ++i) {
    coeffs.push_back({{"order", i},
                      {"alpha", entries_json(d.alphas[i], d.pair)},
                      {"mu", entries_json(d.mus[i], d.pair)},
                      {"lambda", entries_json(d.lambdas[i], d.pair)}});
  }
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

json export_cochain(const Cochain& c, const CourantPair& pair) {
  return {{"p", c.p()}, {"q", c.q()}, {"entries", entries_json(c, pair)}};
}

json export_total_cochain(const TotalCochain& c, const CourantPair& pair) {
  json parts = json::array();
  for (const auto& part : c.components()) parts.push_back(export_cochain(part, pair));
  return {{"degree", c.degree()}, {"components", std::move(parts)}};
}

}  // namespace cpair
