#include <gtest/gtest.h>

#include "pbw/freelie.hpp"
#include "pbw/matrix.hpp"
#include "pbw/series.hpp"

using namespace pbw;

namespace {

FreeLieElem L(int k, const Word& w, const Rational& c = 1) { return {k, LinComb<Word>(w, c)}; }

// Strictly upper triangular n x n matrix with deterministic pseudo-random entries.
Matrix nilpotent(int n, int seed) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = Rational((seed * 7 + i * 13 + j * 5) % 11 - 5) / (1 + (i + j + seed) % 3);
  return m;
}

Matrix generic(int n, int seed) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (seed * 31 + i * 17 + j * 7 + i * j) % 9 - 4;
  return m;
}

Matrix comm(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix eval_bracket(const Word& w, const std::vector<Matrix>& letters) {
  if (w.size() == 1) return letters[w[0]];
  auto [u, v] = standard_factorization(w);
  return comm(eval_bracket(u, letters), eval_bracket(v, letters));
}

Matrix eval(const FreeLieElem& x, const std::vector<Matrix>& letters) {
  std::size_t n = letters[0].rows();
  Matrix out(n, n);
  for (const auto& [w, c] : x.terms) out = out + eval_bracket(w, letters).scaled(c);
  return out;
}

// exp and log are finite sums for nilpotent matrices.
Matrix mexp(const Matrix& a) {
  std::size_t n = a.rows();
  Matrix out = Matrix::identity(n), p = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = (p * a).scaled(Rational(1, static_cast<long>(k)));
    out = out + p;
  }
  return out;
}

Matrix mlog(const Matrix& g) {
  std::size_t n = g.rows();
  Matrix z = g - Matrix::identity(n), out(n, n), p = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    p = p * z;
    out = out + p.scaled(Rational(k % 2 ? 1 : -1, static_cast<long>(k)));
  }
  return out;
}

// Witt's formula: number of Lyndon words of length n over k letters.
long witt(int k, int n) {
  auto mobius = [](int m) {
    int r = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
      }
    return m > 1 ? -r : r;
  };
  long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long pw = 1;
      for (int i = 0; i < n / d; ++i) pw *= k;
      s += mobius(d) * pw;
    }
  return s / n;
}

}  // namespace

TEST(Lyndon, BasisExamples) {
  EXPECT_EQ(lyndon_basis(2, 2), (std::vector<Word>{{0, 1}}));
  EXPECT_EQ(lyndon_basis(2, 3), (std::vector<Word>{{0, 0, 1}, {0, 1, 1}}));
  EXPECT_TRUE(lyndon_basis(1, 2).empty());
  EXPECT_EQ(lyndon_basis(1, 1), (std::vector<Word>{{0}}));
}

TEST(Lyndon, CountsMatchWittFormula) {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 7; ++n) {
      auto b = lyndon_basis(k, n);
      EXPECT_EQ(static_cast<long>(b.size()), witt(k, n)) << k << "," << n;
      for (const auto& w : b) EXPECT_TRUE(is_lyndon(w));
    }
}

TEST(Lyndon, StandardFactorization) {
  auto [u, v] = standard_factorization(Word{0, 0, 1});
  EXPECT_EQ(u, (Word{0}));
  EXPECT_EQ(v, (Word{0, 1}));
  auto [u2, v2] = standard_factorization(Word{0, 1, 0, 1, 1});
  EXPECT_EQ(u2, (Word{0, 1}));
  EXPECT_EQ(v2, (Word{0, 1, 1}));
}

TEST(LieBracket, Examples) {
  auto x = FreeLieElem::letter(2, 0), y = FreeLieElem::letter(2, 1);
  EXPECT_TRUE(lie_bracket(x, x).is_zero());
  EXPECT_EQ(lie_bracket(x, y), L(2, {0, 1}));
  EXPECT_EQ(lie_bracket(y, x), L(2, {0, 1}, -1));
  // [y,[y,x]] = [[x,y],y], the standard bracketing of xyy.
  EXPECT_EQ(lie_bracket(y, lie_bracket(y, x)), L(2, {0, 1, 1}));
}

TEST(LieBracket, AgreesWithMatrixRepresentation) {
  std::vector<Matrix> m{generic(4, 1), generic(4, 2), generic(4, 3)};
  const int k = 3;
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n1 + n2 <= 5; ++n2)
      for (const auto& a : lyndon_basis(k, n1))
        for (const auto& b : lyndon_basis(k, n2)) {
          auto br = lie_bracket(L(k, a), L(k, b));
          EXPECT_EQ(eval(br, m), comm(eval_bracket(a, m), eval_bracket(b, m)));
        }
}

TEST(LieBracket, ToLieRejectsNonLie) {
  AssocPoly p(Word{0, 1}, 1);
  EXPECT_THROW(to_lie(2, p), std::invalid_argument);
}

TEST(Bch, LowDegrees) {
  auto x = L(2, {0}), y = L(2, {1});
  EXPECT_EQ(bch(1), x + y);
  EXPECT_EQ(bch(2), x + y + Rational(1, 2) * L(2, {0, 1}));
  auto yyx = lie_bracket(y, lie_bracket(y, x));
  auto xxy = L(2, {0, 0, 1});
  EXPECT_EQ(bch(3), x + y + Rational(1, 2) * L(2, {0, 1}) + Rational(1, 12) * xxy + Rational(1, 12) * yyx);
}

TEST(Bch, TwoComputationsAgree) {
  for (int N = 1; N <= 6; ++N) EXPECT_EQ(bch(N), bch_by_recursion(N)) << N;
}

TEST(Bch, MatchesEliminationWithoutDynkin) {
  for (int N = 1; N <= 6; ++N) EXPECT_EQ(bch(N), to_lie(2, bch_assoc(N))) << N;
}

TEST(Bch, MatchesNilpotentMatrices) {
  // Strictly upper triangular 6x6: products of six vanish, so degree <= 5 is exact.
  for (int seed = 0; seed < 3; ++seed) {
    Matrix X = nilpotent(6, seed), Y = nilpotent(6, seed + 5);
    EXPECT_EQ(eval(bch(5), {X, Y}), mlog(mexp(X) * mexp(Y)));
  }
}

TEST(Bch, Symmetry) {
  // bch(x,y) = -bch(-y,-x)
  FreeLieElem b = bch(5);
  auto swapped = substitute(b, {AssocPoly(Word{1}, -1), AssocPoly(Word{0}, -1)}, 2, 5);
  EXPECT_EQ(b, Rational(-1) * swapped);
}

TEST(Bch, Associativity) {
  // 5x5 strictly upper triangular: degree <= 4 truncation is exact.
  FreeLieElem b = bch(4);
  Matrix X = nilpotent(5, 1), Y = nilpotent(5, 2), Z = nilpotent(5, 3);
  EXPECT_EQ(eval(b, {eval(b, {X, Y}), Z}), eval(b, {X, eval(b, {Y, Z})}));
  // Symbolically: multilinear parts of both bracketings coincide up to degree 4.
  auto x = AssocPoly(Word{0}, 1), y = AssocPoly(Word{1}, 1), z = AssocPoly(Word{2}, 1);
  auto xy = to_assoc(substitute(b, {x, y}, 3, 4)), yz = to_assoc(substitute(b, {y, z}, 3, 4));
  auto left = substitute(b, {xy, z}, 3, 4), right = substitute(b, {x, yz}, 3, 4);
  EXPECT_EQ(multilinear_part(left, {1, 1, 1}), multilinear_part(right, {1, 1, 1}));
  EXPECT_EQ(multilinear_part(left, {2, 1, 1}), multilinear_part(right, {2, 1, 1}));
  EXPECT_EQ(left, right);
}

TEST(MultilinearPart, Examples) {
  EXPECT_EQ(multilinear_part(bch(2), {1, 1}), L(2, {0, 1}, Rational(1, 2)));
  EXPECT_EQ(multilinear_part(bch(3), {2, 1}), L(2, {0, 0, 1}, Rational(1, 12)));
  EXPECT_TRUE(multilinear_part(bch(3), {3, 2}).is_zero());
}

TEST(Mbrace, Conventions) {
  EXPECT_EQ(mbrace(1, 0), FreeLieElem::letter(1, 0));
  EXPECT_EQ(mbrace(0, 1), FreeLieElem::letter(1, 0));
  EXPECT_TRUE(mbrace(2, 0).is_zero());
  EXPECT_TRUE(mbrace(0, 3).is_zero());
  EXPECT_THROW(mbrace(0, 0), std::invalid_argument);
}

TEST(Mbrace, LowOrder) {
  EXPECT_EQ(mbrace(1, 1), L(2, {0, 1}, Rational(1, 2)));
  // [x1,[x2,y]] + [x2,[x1,y]] over letters x1=0, x2=1, y=2
  AssocPoly x1(Word{0}, 1), x2(Word{1}, 1), y(Word{2}, 1);
  auto expected = to_lie(3, assoc_commutator(x1, assoc_commutator(x2, y)) + assoc_commutator(x2, assoc_commutator(x1, y)));
  EXPECT_EQ(mbrace(2, 1), Rational(1, 12) * expected);
}

TEST(Mbrace, ClosedFormulaForQOne) {
  EXPECT_EQ(mbrace_p1_closed(1), L(2, {0, 1}, Rational(1, 2)));
  EXPECT_TRUE(mbrace_p1_closed(3).is_zero());
  for (int p = 1; p <= 4; ++p) EXPECT_EQ(mbrace_p1_closed(p), mbrace(p, 1)) << p;
}

TEST(Mbrace, SwapRecoversBracket) {
  // M_{1,1}(x,y) - M_{1,1}(y,x) = [x,y]
  auto m = mbrace(1, 1);
  auto swapped = substitute(m, {AssocPoly(Word{1}, 1), AssocPoly(Word{0}, 1)}, 2, 2);
  EXPECT_EQ(m - swapped, L(2, {0, 1}));
}

TEST(Mbrace, PolarizationOfBchAgreesWithMatrices) {
  // M_{p,q} evaluated at matrices equals the multilinear coefficient of
  // log(e^{sum a_i X_i} e^{sum b_j Y_j}) extracted by nilpotent scalars; here we
  // check the symmetric case X_i = X, Y_j = Y, where M_{p,q} collapses to
  // p! q! times the bidegree (p,q) part of bch.
  for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 1}, {1, 3}}) {
    auto m = mbrace(p, q);
    std::vector<AssocPoly> img;
    for (int i = 0; i < p; ++i) img.emplace_back(Word{0}, 1);
    for (int j = 0; j < q; ++j) img.emplace_back(Word{1}, 1);
    auto collapsed = substitute(m, img, 2, p + q);
    std::vector<int> md{p, q};
    auto part = multilinear_part(bch(p + q), md);
    EXPECT_EQ(collapsed, Rational(factorial(p) * factorial(q)) * part);
  }
}
