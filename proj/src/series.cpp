#include "pbw/series.hpp"

#include <mutex>
#include <stdexcept>

namespace pbw {

std::vector<Rational> series_reciprocal(std::span<const Rational> series, std::size_t length) {
  if (series.empty() || series[0] == 0)
    throw std::invalid_argument("series_reciprocal: constant term must be nonzero");
  std::vector<Rational> out(length);
  if (length == 0) return out;
  out[0] = 1 / series[0];
  for (std::size_t n = 1; n < length; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n && k < series.size(); ++k) acc += series[k] * out[n - k];
    out[n] = -acc / series[0];
  }
  return out;
}

namespace {

// (1 - exp(-x))/x  or  (exp(x) - 1)/x, coefficients 0..length-1.
std::vector<Rational> denominator_series(SeriesKind kind, std::size_t length) {
  std::vector<Rational> d(length);
  for (std::size_t k = 0; k < length; ++k) {
    Rational c(Integer(1), factorial(static_cast<unsigned>(k + 1)));
    if (kind == SeriesKind::Todd && k % 2 == 1) c = -c;
    d[k] = c;
  }
  return d;
}

struct Memo {
  std::mutex mutex;
  std::vector<Rational> todd;
};

Memo& memo() {
  static Memo m;
  return m;
}

}  // namespace

SeriesTable series_table(SeriesKind kind, std::size_t length) {
  auto den = denominator_series(kind, length);
  return SeriesTable{kind, series_reciprocal(den, length)};
}

Rational todd_coefficient(std::size_t i) {
  auto& m = memo();
  std::lock_guard lock(m.mutex);
  if (m.todd.size() <= i) {
    std::size_t length = std::max<std::size_t>(2 * m.todd.size(), i + 1);
    length = std::max<std::size_t>(length, 16);
    m.todd = series_table(SeriesKind::Todd, length).coefficients;
  }
  return m.todd[i];
}

Rational inverse_todd_coefficient(std::size_t i) {
  Rational c = todd_coefficient(i);
  return i % 2 == 0 ? c : Rational(-c);
}

}  // namespace pbw
