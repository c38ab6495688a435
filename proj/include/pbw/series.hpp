#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pbw/rational.hpp"

namespace pbw {

enum class SeriesKind {
  Todd,         ///< x / (1 - exp(-x))
  InverseTodd,  ///< x / (exp(x) - 1)
};

struct SeriesTable {
  SeriesKind kind;
  std::vector<Rational> coefficients;
};

/// Reciprocal of a power series with nonzero constant term, truncated to
/// `length` coefficients.
std::vector<Rational> series_reciprocal(std::span<const Rational> series, std::size_t length);

/// First `length` Taylor coefficients of the requested series.
SeriesTable series_table(SeriesKind kind, std::size_t length);

/// i-th coefficient of x/(1-exp(-x)). Memoized; safe to call concurrently.
Rational todd_coefficient(std::size_t i);

/// i-th coefficient of x/(exp(x)-1); equals (-1)^i todd_coefficient(i).
Rational inverse_todd_coefficient(std::size_t i);

}  // namespace pbw
