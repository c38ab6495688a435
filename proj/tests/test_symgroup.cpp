#include <gtest/gtest.h>

#include "pbw/symgroup.hpp"

using namespace pbw;

namespace {

GroupAlgElem tau(int n, int i) { return adjacent_transposition(n, i); }

}  // namespace

TEST(Permutation, CompositionAndInverse) {
  Permutation a{{1, 2, 0}}, b{{1, 0, 2}};
  EXPECT_EQ((a * b).images, (std::vector<int>{2, 1, 0}));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  for (const auto& g : all_permutations(4)) {
    Permutation p = Permutation::identity(4);
    for (int j : g.bubble_word()) p = p * Permutation::adjacent(4, j);
    EXPECT_EQ(p, g);
    EXPECT_EQ(static_cast<int>(g.bubble_word().size()), g.inversions());
  }
}

TEST(Symmetrizer, SmallCases) {
  EXPECT_EQ(symmetrizer(1), GroupAlgElem::one(1));
  EXPECT_EQ(symmetrizer(2), Rational(1, 2) * (GroupAlgElem::one(2) + tau(2, 1)));
  auto p3 = symmetrizer(3);
  EXPECT_EQ(p3.terms.size(), 6u);
  for (const auto& [g, c] : p3.terms) EXPECT_EQ(c, Rational(1, 6));
  EXPECT_THROW(symmetrizer(0), std::invalid_argument);
}

TEST(Symmetrizer, IdempotentAndAbsorbsTransposition) {
  for (int n = 1; n <= 6; ++n) {
    auto p = symmetrizer(n);
    EXPECT_EQ(p * p, p) << n;
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(p * tau(n, i), p);
      EXPECT_EQ(tau(n, i) * p, p);
      EXPECT_EQ((GroupAlgElem::one(n) + tau(n, i)) * p, Rational(2) * p);
    }
  }
}

TEST(IdealDecomposition, NTwo) {
  auto a = ideal_decomposition(2);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0], Rational(1, 2) * GroupAlgElem::one(2));
}

TEST(IdealDecomposition, IdentityHoldsUpToSix) {
  for (int n = 2; n <= 6; ++n) {
    auto a = ideal_decomposition(n);
    EXPECT_EQ(a.size(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(recombine_decomposition(n, a), GroupAlgElem::one(n) - symmetrizer(n)) << n;
  }
}

TEST(IdealDecomposition, BruteForceCoefficientsNFour) {
  // Expand sum (1 - tau_i) a_i permutation by permutation.
  auto a = ideal_decomposition(4);
  std::map<Permutation, Rational> acc;
  for (int i = 0; i < 3; ++i)
    for (const auto& [g, c] : a[i].terms) {
      acc[g] += c;
      acc[Permutation::adjacent(4, i + 1) * g] -= c;
    }
  for (const auto& g : all_permutations(4)) {
    Rational expected = Rational(-1, 24) + (g.is_identity() ? 1 : 0);
    EXPECT_EQ(acc[g], expected);
  }
}

TEST(IdealDecomposition, WorkedThreeFixture) {
  auto one = GroupAlgElem::one(3);
  auto a1 = Rational(1, 6) * (Rational(3) * one + tau(3, 2) + tau(3, 2) * tau(3, 1));
  auto a2 = Rational(1, 3) * (one + tau(3, 1));
  EXPECT_EQ(recombine_decomposition(3, {a1, a2}), one - symmetrizer(3));
}
