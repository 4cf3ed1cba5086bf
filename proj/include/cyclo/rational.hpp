#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyclo {

using Int = std::int64_t;

/// Exact rational number (GMP-backed, always canonical).
using Rational = mpq_class;

Rational make_rational(Int num, Int den = 1);

/// base^exp for any integer exponent; rejects 0^negative.
Rational pow(const Rational& base, Int exp);

bool is_integer(const Rational& x);

/// Converts an integral rational to Int; throws std::domain_error otherwise.
Int to_int(const Rational& x);

std::string to_string(const Rational& x);

}  // namespace cyclo
