#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cpair {

/// Exact rational number; GMP keeps it canonical (positive denominator, reduced).
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p/q" or an integer string. Decimals, exponents and whitespace are
/// rejected. Throws InputError.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

bool is_zero(std::span<const Scalar> values);

Vector zero_vector(std::size_t n);

Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace cpair
