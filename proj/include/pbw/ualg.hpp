#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pbw/freelie.hpp"
#include "pbw/symalg.hpp"

namespace pbw {

/// Element of U(g) in PBW normal form: nondecreasing words in the basis
/// order, odd letters at most once.
using UEnvElem = LinComb<Word>;

/// Value in g of a multilinear Lie polynomial whose letter i is set to the
/// basis vector values[i]. Each bracket monomial is evaluated with its leaves
/// in word order, times the Koszul sign of that reordering.
Vec eval_lie(const LieAlg& g, const FreeLieElem& x, const std::vector<int>& values);

/// m_star on two monomials: sum over set partitions of the letters of a then b
/// in which every block either is a singleton or mixes letters of a and b; a
/// mixed block with i letters of a and j of b contributes M_{i,j}, and the
/// block values are multiplied with m0.
SymElem star_monomials(const LieAlg& g, const Word& a, const Word& b);

/// Throws PbwError(TruncationOverflow) if the product can leave S^{<=N}.
SymElem star_multiply(const LieAlg& g, int N, const SymElem& a, const SymElem& b);

/// Independent product through U(g): symmetrize, normal-order, desymmetrize.
class PbwOracle {
 public:
  explicit PbwOracle(LieAlg g);

  const LieAlg& algebra() const { return g_; }
  /// Rewrites b a -> (-1)^{|a||b|} a b + [b,a] and e e -> [e,e]/2 (e odd).
  UEnvElem normal_order(const Word& w);
  UEnvElem normal_order(const UEnvElem& x);
  UEnvElem multiply(const UEnvElem& x, const UEnvElem& y);
  /// x_1...x_k -> (1/k!) sum_sigma (sign) x_s(1)...x_s(k), normal-ordered.
  UEnvElem symmetrize(const SymElem& a);
  /// Inverse of symmetrize by back-substitution from the top degree down.
  SymElem desymmetrize(const UEnvElem& u);
  SymElem star(const SymElem& a, const SymElem& b);

 private:
  UEnvElem symmetrize_monomial(const Word& m);
  LieAlg g_;
  std::mutex mutex_;
  std::map<Word, UEnvElem> normal_cache_;
  std::map<Word, UEnvElem> sym_cache_;
};

SymElem pbw_oracle_multiply(const LieAlg& g, int N, const SymElem& a, const SymElem& b);

/// Delta^p on V^{(x)p}: the iterated star product of the p letters.
LinearMap<Word, Word> delta_map(const LieAlg& g, int p);

/// c_p^k: the S^k V component of delta_map(p).
LinearMap<Word, Word> structure_coefficients(const LieAlg& g, int p, int k);

/// c_p^k o Psi_p == {c_{p-1}^k o (id (x) alpha (x) id)}_i with alpha = mu/2,
/// compared on every basis element of every block.
bool structure_recursion_check(const LieAlg& g, int p, int k);

/// omega as a LinearMap S^n V (x) V -> S^{n-1} V (x) V; keys are (monomial, letter).
LinearMap<SymVecKey, SymVecKey> omega_map(const LieAlg& g, int n);
LinearMap<SymVecKey, Word> phi_todd_map(const LieAlg& g, int n);

/// c_p: S^n V (x) S^p V* -> S^{n-p} V with keys (monomial, dual monomial).
LinearMap<SymPairKey, Word> contraction_map(const LieAlg& g, int n, int p);

}  // namespace pbw
