#include "cpair/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "cpair/errors.hpp"

namespace cpair {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw InputError("not an exact rational: \"" + std::string(text) + "\" (expected p/q or an integer)");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw InputError("zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar value(std::string(text), 10);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

bool is_zero(std::span<const Scalar> values) {
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

}  // namespace cpair
