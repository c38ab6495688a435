#include <gtest/gtest.h>

#include <vector>

#include "pbw/rational.hpp"
#include "pbw/series.hpp"

using namespace pbw;

namespace {

// Bernoulli numbers from sum_{k<=m} C(m+1,k) B_k = 0 with B_1 = -1/2;
// x/(e^x-1) = sum B_i x^i / i!.
std::vector<Rational> bernoulli_oracle(unsigned n) {
  std::vector<Rational> B(n + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * B[k];
    B[m] = -s / Rational(m + 1);
  }
  return B;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -4 "), Rational(-4));
  EXPECT_EQ(to_string(Rational(-2) / 4), "-1/2");
  EXPECT_EQ(to_string(Rational(6) / 3), "2");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/-2"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Series, LowOrderTodd) {
  EXPECT_EQ(todd_coefficient(0), 1);
  EXPECT_EQ(todd_coefficient(1), Rational(1, 2));
  EXPECT_EQ(todd_coefficient(2), Rational(1, 12));
  EXPECT_EQ(todd_coefficient(3), 0);
  EXPECT_EQ(todd_coefficient(4), Rational(-1, 720));
  EXPECT_EQ(inverse_todd_coefficient(1), Rational(-1, 2));
  EXPECT_EQ(inverse_todd_coefficient(2), Rational(1, 12));
  EXPECT_EQ(inverse_todd_coefficient(3), 0);
}

TEST(Series, MatchesBernoulliRecurrence) {
  auto B = bernoulli_oracle(20);
  for (unsigned i = 0; i <= 20; ++i) {
    Rational expected = B[i] / Rational(factorial(i));
    EXPECT_EQ(inverse_todd_coefficient(i), expected) << "i=" << i;
  }
}

TEST(Series, SignRelation) {
  for (unsigned i = 0; i <= 12; ++i)
    EXPECT_EQ(todd_coefficient(i), (i % 2 ? -1 : 1) * inverse_todd_coefficient(i));
}

TEST(Series, ProductWithReciprocalIsOne) {
  for (auto kind : {SeriesKind::Todd, SeriesKind::InverseTodd}) {
    auto t = series_table(kind, 13).coefficients;
    auto r = series_reciprocal(t, 13);
    for (std::size_t n = 0; n < 13; ++n) {
      Rational s = 0;
      for (std::size_t k = 0; k <= n; ++k) s += t[k] * r[n - k];
      EXPECT_EQ(s, n == 0 ? 1 : 0);
    }
  }
}

TEST(Series, ReciprocalRejectsZeroConstant) {
  std::vector<Rational> s{0, 1};
  EXPECT_THROW(series_reciprocal(s, 3), std::invalid_argument);
}
