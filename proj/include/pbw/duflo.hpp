#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbw/ualg.hpp"

namespace pbw {

/// Polynomial in power sums y_1, y_2, ...: a monomial is the sorted list of
/// the indices of its factors, so y_1^2 y_3 is {1, 1, 3}.
using PowerSumPoly = LinComb<Word>;

/// Coefficients of log(x / (1 - e^{-x})), index 0..length-1.
std::vector<Rational> log_todd_coefficients(std::size_t length);

/// Degree-k part of prod_n x_n/(1-e^{-x_n}) in the power sums y_i = sum_n x_n^i,
/// computed as the weight-k part of exp(sum_j l_j y_j).
PowerSumPoly p_polynomial(int k);

/// k P_k + sum_{i=1}^k inverse_todd(i) y_i P_{k-i} == 0.
bool bernoulli_recursion_check(int k);

std::string to_string(const PowerSumPoly& p);

struct DufloElement {
  int trunc = 0;
  std::vector<DualElem> components;  ///< components[p] in S^p(V*)
};

/// d_p = P_p(nu_1, ..., nu_p) with products in S(V*).
DufloElement duflo_element(const LieAlg& g, int N);

/// sqrt of the Duflo element as a truncated series in S(V*).
std::vector<DualElem> duflo_sqrt(const LieAlg& g, int N);

/// a_0..a_ell, each a map from the source keys to S^k V.
struct TorsionMorphism {
  int ell = 0;
  std::vector<Word> source;
  std::vector<LinearMap<Word, Word>> components;  ///< components[k] lands in S^k V

  SymElem total(const Word& x) const;
};

/// Downward recursion a_{ell-k} = -(1/k) sum_{i<=k} inverse_todd(i) c_i(a_{ell-k+i} (x) nu_i).
/// Throws PbwError(TruncationTooSmall) when ell > N-1.
TorsionMorphism torsion_solve(const LieAlg& g, int ell, const LinearMap<Word, Word>& top, int N);

/// sum_p c_p(a_ell (x) d_p).
TorsionMorphism torsion_closed_form(const LieAlg& g, int ell, const LinearMap<Word, Word>& top);

/// Downward solve of the traced torsion equations, where the leading term
/// carries (ell - k + sdim V) instead of k:
/// a_{ell-k} = -1/(ell-k+sdim V) sum_{i<=k} todd(i) c_i(a_{ell-k+i} (x) nu_i).
/// Throws std::domain_error when a leading coefficient vanishes.
TorsionMorphism torsion_trace_solve(const LieAlg& g, int ell, const LinearMap<Word, Word>& top);

struct TorsionDefect {
  Word source;
  int letter = 0;
  int degree = 0;  ///< a graded piece below ell+1 that is nonzero
  SymElem piece;
};

/// Checks that a(x) * v lies in S^{ell+1} V for every source key x and basis v.
std::optional<TorsionDefect> torsion_defect(const LieAlg& g, const TorsionMorphism& a);

/// All a in S^{<=ell} V with a * v in S^{ell+1} V for every v, as an exact
/// kernel basis.
std::vector<SymElem> torsion_space(const LieAlg& g, int ell);

/// Basis of the ad-invariant elements of S^k V.
std::vector<SymElem> invariant_polynomials(const LieAlg& g, int k);

/// Keyword tops: "identity" (ell = 1, V -> S^1 V), "projection" (V^{(x)ell} -> S^ell V),
/// "invariants" (one source key per basis element of the invariants of S^ell V).
LinearMap<Word, Word> top_identity(const LieAlg& g);
LinearMap<Word, Word> top_projection(const LieAlg& g, int ell);
LinearMap<Word, Word> top_invariants(const LieAlg& g, int ell);

struct CasimirCheck {
  SymElem casimir;
  SymElem twisted;     ///< c(casimir (x) sqrt d), before symmetrization
  bool central = false;
  std::string detail;
};

/// Twists the degree-2 invariant of g by sqrt(d), symmetrizes into U(g) and
/// tests [x, u] = 0 for every basis x with the PBW oracle.
CasimirCheck duflo_casimir_check(const LieAlg& g);

}  // namespace pbw
