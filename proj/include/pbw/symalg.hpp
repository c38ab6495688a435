#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "pbw/liealg.hpp"

namespace pbw {

/// Element of S(V): canonical (sorted) monomials, odd letters at most once.
using SymElem = LinComb<Word>;
/// Basis key of S^n V (x) V.
using SymVecKey = std::pair<Word, int>;
using SymVecElem = LinComb<SymVecKey>;
/// Basis key of S(V) (x) S(V).
using SymPairKey = std::pair<Word, Word>;
using SymPairElem = LinComb<SymPairKey>;

/// A word read in S(V) (sign and sorting), zero for repeated odd letters.
SymElem sym_monomial(const GradedSpace& V, const Word& w);
/// All monomials of degree <= N.
std::vector<Word> sym_basis_upto(const GradedSpace& V, int N);

/// Commutative product in S(V) (also used for S(V*), which has the same parities).
SymElem m0(const GradedSpace& V, const SymElem& a, const SymElem& b);
SymElem m0(const GradedSpace& V, const SymVecElem& t);
SymElem m0(const GradedSpace& V, const SymPairElem& t);

/// Right derivative by e^i: sum_j eps_j delta(a_j, i) a\j, with eps_j the sign
/// of moving a_j to the end.
SymElem right_derivative(const GradedSpace& V, const Word& mono, int i);
/// c_p(a (x) xi_1...xi_p) = d_{xi_p} ... d_{xi_1} a.
SymElem contract(const GradedSpace& V, const SymElem& a, const Word& dual_mono);
SymElem contract(const GradedSpace& V, const SymElem& a, const DualElem& xi);

/// omega(x_1...x_n (x) v) = sum_j eps_j x_1..^x_j..x_n (x) [x_j, v].
SymVecElem omega(const LieAlg& g, const SymVecElem& t);
SymVecElem omega_power(const LieAlg& g, int p, const SymVecElem& t);

/// m0 o sum_{i<=n} todd_i omega^i on S^n V (x) V.
SymElem phi_todd(const LieAlg& g, const Word& mono, int v);

/// (c_p (x) id)(a (x) (mu*)^{bullet p}(v)).
SymVecElem contracted_bullet(const LieAlg& g, const Word& mono, int p, int v);

/// Derivation of S(V) extending ad_x: sum_j sign x_1..[x,x_j]..x_n.
SymElem derivation_action(const LieAlg& g, int x, const SymElem& a);
/// Derivation of S(V) of the given parity extending a linear map V -> V.
SymElem derivation_extend(const GradedSpace& V, bool odd, const std::function<Vec(int)>& image, const SymElem& a);

/// Shuffle coproduct of S(V).
SymPairElem coproduct(const GradedSpace& V, const SymElem& a);
/// Reduced coproduct iterated k-1 times, landing in k tensor factors of
/// positive degree; returned as lists of k monomials.
LinComb<std::vector<Word>> reduced_coproduct_iterated(const GradedSpace& V, const Word& mono, int k);

int total_degree(const SymElem& a);  ///< max monomial length, -1 for zero
SymElem degree_part(const SymElem& a, int k);

}  // namespace pbw
