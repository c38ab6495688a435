#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pbw {

/// Exact rational scalar. GMP keeps every value canonical: lowest terms,
/// positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Serialized form used by every file format: "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace pbw
