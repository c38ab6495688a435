#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pbw/gvs.hpp"
#include "pbw/lincomb.hpp"

namespace pbw {

/// Element of the free associative algebra: words over letters 0..k-1.
using AssocPoly = LinComb<Word>;

AssocPoly assoc_multiply(const AssocPoly& a, const AssocPoly& b, int max_degree = -1);
AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b);
AssocPoly truncate(const AssocPoly& a, int max_degree);
AssocPoly homogeneous_part(const AssocPoly& a, int degree);

bool is_lyndon(const Word& w);
/// w = uv with v the longest proper Lyndon suffix. Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);
/// Lyndon words of the given length over letters 0..alphabet_size-1, lexicographic.
std::vector<Word> lyndon_basis(int alphabet_size, int degree);

/// Linear combination of Lyndon basis brackets over a fixed alphabet.
struct FreeLieElem {
  int alphabet = 0;
  LinComb<Word> terms;  ///< keys are Lyndon words

  static FreeLieElem letter(int alphabet, int i) { return {alphabet, LinComb<Word>(Word{i}, 1)}; }
  FreeLieElem& operator+=(const FreeLieElem& o);
  FreeLieElem& operator-=(const FreeLieElem& o);
  friend FreeLieElem operator+(FreeLieElem a, const FreeLieElem& b) { return a += b; }
  friend FreeLieElem operator-(FreeLieElem a, const FreeLieElem& b) { return a -= b; }
  friend FreeLieElem operator*(const Rational& s, FreeLieElem a) { a.terms *= s; return a; }
  friend bool operator==(const FreeLieElem& a, const FreeLieElem& b) {
    return a.alphabet == b.alphabet && a.terms == b.terms;
  }
  bool is_zero() const { return terms.is_zero(); }
};

/// Associative expansion of the standard bracketing of a Lyndon word.
AssocPoly lyndon_expand(const Word& lyndon);
AssocPoly to_assoc(const FreeLieElem& x);

/// Re-expresses a Lie polynomial in the Lyndon basis by repeatedly removing
/// its smallest word (which must be Lyndon, since each expanded bracket is
/// that word plus larger ones). Throws std::invalid_argument if the input is
/// not a Lie polynomial.
FreeLieElem to_lie(int alphabet, const AssocPoly& p);

/// Replaces letter i by images[i] (an associative polynomial over
/// `new_alphabet` letters) and re-expands, dropping degrees above max_degree.
FreeLieElem substitute(const FreeLieElem& x, const std::vector<AssocPoly>& images, int new_alphabet,
                       int max_degree);

FreeLieElem lie_bracket(const FreeLieElem& a, const FreeLieElem& b);
FreeLieElem truncate(const FreeLieElem& a, int max_degree);

/// log(exp(x) exp(y)) in the free associative algebra on {x=0, y=1}, degree <= N.
AssocPoly bch_assoc(int N);

/// bch(x, y) up to degree N: the associative log projected degreewise by the
/// Dynkin map w_1...w_n -> [w_1,[w_2,...,w_n]]/n.
FreeLieElem bch(int N);

/// bch(x, y) up to degree N from Z(t) = log(e^x e^{ty}), solving
/// Z' = sum_k todd_k ad_Z^k(y) degree by degree in t, entirely in Lyndon arithmetic.
FreeLieElem bch_by_recursion(int N);

/// Component where letter i appears exactly multidegree[i] times.
FreeLieElem multilinear_part(const FreeLieElem& s, const std::vector<int>& multidegree);

/// M_{p,q} over letters x_1..x_p (0..p-1), y_1..y_q (p..p+q-1). Memoized.
FreeLieElem mbrace(int p, int q);

/// todd(p) * sum over sigma of [x_{s(1)},[...,[x_{s(p)},y]...]].
FreeLieElem mbrace_p1_closed(int p);

/// Left-nested bracket notation, e.g. "[x,[x,y]]" with the given letter names.
std::string lyndon_bracket_string(const Word& w, const std::vector<std::string>& letters);
std::string to_string(const FreeLieElem& x, const std::vector<std::string>& letters);

}  // namespace pbw
