#include <gtest/gtest.h>

#include <functional>

#include "pbw/gvs.hpp"

using namespace pbw;

namespace {

GradedSpace even(int d) {
  std::vector<BasisVector> b;
  for (int i = 0; i < d; ++i) b.push_back({"v" + std::to_string(i), 0});
  return GradedSpace(b);
}

using Consts = std::map<std::pair<int, int>, std::map<int, Rational>>;

// Bracket map from structure constants listed for a<=b; the (b,a) entries are
// filled in by graded antisymmetry.
TensorMap bracket_map(const GradedSpace& V, const Consts& c) {
  TensorMap m;
  m.domain = tensor_basis(V, 2);
  for (const auto& [ab, res] : c) {
    auto [a, b] = ab;
    TensorElem img, rev;
    for (const auto& [k, x] : res) {
      img.add(Word{k}, x);
      rev.add(Word{k}, -koszul_swap_sign(V, a, b) * x);
    }
    m.set(Word{a, b}, img);
    if (a != b) m.set(Word{b, a}, rev);
  }
  return m;
}

// Brute-force graded Jacobiator [[a,b],c] - [a,[b,c]] + s [b,[a,c]] on basis
// triples, using only the bracket table.
bool jacobi_oracle(const GradedSpace& V, const TensorMap& br) {
  auto bracket = [&](const TensorElem& x, const TensorElem& y) {
    TensorElem out;
    for (const auto& [u, c] : x)
      for (const auto& [v, d] : y) out.add(br.apply(Word{u[0], v[0]}), c * d);
    return out;
  };
  for (int a = 0; a < V.dim(); ++a)
    for (int b = 0; b < V.dim(); ++b)
      for (int c = 0; c < V.dim(); ++c) {
        TensorElem A(Word{a}, 1), B(Word{b}, 1), C(Word{c}, 1);
        TensorElem j = bracket(bracket(A, B), C) - bracket(A, bracket(B, C)) +
                       Rational(koszul_swap_sign(V, a, b)) * bracket(B, bracket(A, C));
        if (!j.is_zero()) return false;
      }
  return true;
}

}  // namespace

TEST(KoszulAct, Examples) {
  GradedSpace V({{"x", 0}, {"y", 0}, {"t", 1}});
  auto t1 = Permutation::adjacent(2, 1);
  EXPECT_EQ(koszul_act(V, t1, Word{0, 1}), (std::pair<int, Word>{1, {1, 0}}));
  EXPECT_EQ(koszul_act(V, t1, Word{2, 2}), (std::pair<int, Word>{-1, {2, 2}}));
  EXPECT_TRUE(koszul_act(V, symmetrizer(2), TensorElem(Word{2, 2}, 1)).is_zero());
  EXPECT_THROW(koszul_act(V, symmetrizer(3), TensorElem(Word{2, 2}, 1)), std::invalid_argument);
}

TEST(KoszulAct, IsAHomomorphism) {
  GradedSpace V({{"a", 1}, {"b", 0}, {"c", 1}, {"d", 1}});
  Word w{0, 1, 2, 3};
  for (const auto& g : all_permutations(4))
    for (const auto& h : all_permutations(4)) {
      auto [s1, w1] = koszul_act(V, h, w);
      auto [s2, w2] = koszul_act(V, g, w1);
      auto [s3, w3] = koszul_act(V, g * h, w);
      EXPECT_EQ(w2, w3);
      EXPECT_EQ(s1 * s2, s3);
    }
}

TEST(SplitPower, Dimensions) {
  auto s = split_power(even(2), 3);
  EXPECT_EQ(s.sym_basis.size(), 4u);
  EXPECT_EQ(s.dim_lambda, 4);
  EXPECT_EQ(split_power(even(1), 5).dim_lambda, 0);
  auto odd = split_power(GradedSpace({{"t", 1}}), 2);
  EXPECT_EQ(odd.sym_basis.size(), 0u);
  EXPECT_EQ(odd.dim_lambda, 1);
}

TEST(SplitPower, ProjectionsAndInclusionsAreComplementary) {
  GradedSpace V({{"x", 0}, {"t", 1}, {"u", -1}});
  for (int n = 0; n <= 4; ++n) {
    auto s = split_power(V, n);
    std::size_t D = s.tensor_basis.size();
    EXPECT_EQ(s.sym_basis.size() + static_cast<std::size_t>(s.dim_lambda), D);
    EXPECT_EQ(s.proj_sym * s.incl_sym, Matrix::identity(s.sym_basis.size()));
    EXPECT_EQ(s.proj_lambda * s.incl_lambda, Matrix::identity(s.dim_lambda));
    EXPECT_EQ(s.incl_sym * s.proj_sym + s.incl_lambda * s.proj_lambda, Matrix::identity(D));
    Matrix P = s.incl_sym * s.proj_sym;
    EXPECT_EQ(P * P, P);
  }
}

TEST(SplitPower, SymmetricDimensionMatchesCount) {
  // Even part: multisets; odd part: subsets.
  GradedSpace V({{"x", 0}, {"y", 0}, {"t", 1}, {"u", 1}});
  for (int n = 0; n <= 4; ++n) {
    unsigned expected = 0;
    for (int k = 0; k <= std::min(n, 2); ++k)
      expected += binomial(2, k).get_ui() * binomial(2 + (n - k) - 1, n - k).get_ui();
    EXPECT_EQ(split_power(V, n).sym_basis.size(), expected) << n;
  }
}

TEST(PsiPhi, TwoIsInclusion) {
  GradedSpace V = even(2);
  auto pp = psi_map(V, 2);
  EXPECT_EQ(pp.block_basis.size(), 1u);
  EXPECT_EQ(pp.psi.apply(pp.block_basis[0]), TensorElem(Word{0, 1}, 1) - TensorElem(Word{1, 0}, 1));
  // Phi_2 = (1 - tau)/2 read in Lambda^2 coordinates.
  EXPECT_EQ(pp.phi.apply(Word{0, 1}), LinComb<BlockWord>(BlockWord{1, {0, 1}}, Rational(1, 2)));
  EXPECT_EQ(pp.phi.apply(Word{1, 0}), LinComb<BlockWord>(BlockWord{1, {0, 1}}, Rational(-1, 2)));
}

TEST(PsiPhi, RankAndComplement) {
  GradedSpace V2 = even(2);
  auto pp = psi_map(V2, 3);
  auto tb = tensor_basis(V2, 3);
  EXPECT_EQ(rank(to_matrix(pp.psi, pp.block_basis, tb)), 4u);

  for (const auto& V : {even(2), GradedSpace({{"x", 0}, {"t", 1}}), GradedSpace({{"t", 1}, {"s", 3}, {"x", 2}})}) {
    for (int n = 2; n <= 4; ++n) {
      auto r = psi_map(V, n);
      auto basis = tensor_basis(V, n);
      Matrix composite = to_matrix(compose(r.psi, r.phi), basis, basis);
      Matrix pi = to_matrix(permutation_map(V, symmetrizer(n)), basis, basis);
      EXPECT_EQ(composite + pi, Matrix::identity(basis.size())) << n;
    }
  }
}

TEST(Jacobi, ZeroBracket) {
  GradedSpace V = even(2);
  TensorMap zero;
  zero.domain = tensor_basis(V, 2);
  auto w = jacobi_witness(V, zero);
  ASSERT_TRUE(w.beta.has_value());
  EXPECT_TRUE(w.beta->is_zero());
}

TEST(Jacobi, RejectsNonAntisymmetric) {
  GradedSpace V = even(2);
  TensorMap m;
  m.domain = tensor_basis(V, 2);
  m.set(Word{0, 1}, TensorElem(Word{0}, 1));
  EXPECT_THROW(jacobi_witness(V, m), std::invalid_argument);
}

TEST(Jacobi, AgreesWithOracleBothWays) {
  struct Case {
    GradedSpace V;
    Consts c;
  };
  GradedSpace sl2({{"e", 0}, {"h", 0}, {"f", 0}});
  GradedSpace abc = even(3);
  GradedSpace sh({{"h", 0}, {"t", 1}});
  std::vector<Case> cases = {
      // sl2
      {sl2, {{{1, 0}, {{0, 2}}}, {{1, 2}, {{2, -2}}}, {{0, 2}, {{1, 1}}}}},
      // A2
      {even(2), {{{0, 1}, {{1, 1}}}}},
      // Heisenberg
      {abc, {{{0, 1}, {{2, 1}}}}},
      // [x,y]=z, [x,z]=y, [y,z]=y: not Lie
      {abc, {{{0, 1}, {{2, 1}}}, {{0, 2}, {{1, 1}}}, {{1, 2}, {{1, 1}}}}},
      // super Heisenberg [t,t]=h
      {sh, {{{1, 1}, {{0, 1}}}}},
      // [t,t]=h, [h,t]=t: not Lie
      {sh, {{{1, 1}, {{0, 1}}}, {{0, 1}, {{1, 1}}}}},
  };
  int accepted = 0, rejected = 0;
  for (const auto& cs : cases) {
    for (Rational scale : {Rational(1), Rational(1, 2)}) {
      TensorMap br = bracket_map(cs.V, cs.c);
      for (auto& [k, v] : br.columns) v *= scale;
      bool oracle = jacobi_oracle(cs.V, br);
      auto w = jacobi_witness(cs.V, br);
      EXPECT_EQ(w.beta.has_value(), oracle);
      EXPECT_EQ(!w.violation.has_value(), oracle);
      (oracle ? accepted : rejected)++;
    }
  }
  EXPECT_EQ(accepted, 8);
  EXPECT_EQ(rejected, 4);
}
