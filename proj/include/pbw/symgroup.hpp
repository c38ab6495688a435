#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pbw/lincomb.hpp"

namespace pbw {

/// Permutation of {0..n-1} in one-line notation: slot i goes to images[i].
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  /// Adjacent transposition tau_i swapping i-1 and i (i is 1-based, as usual).
  static Permutation adjacent(int n, int i);

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i]; }
  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;
  /// Word j_1..j_d of adjacent transpositions (1-based) with
  /// this = tau_{j_1} ... tau_{j_d}, obtained by bubble sort.
  std::vector<int> bubble_word() const;

  auto operator<=>(const Permutation&) const = default;
};

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Element of Q[S_n].
struct GroupAlgElem {
  int n = 0;
  LinComb<Permutation> terms;

  static GroupAlgElem zero(int n) { return {n, {}}; }
  static GroupAlgElem one(int n) { return {n, LinComb<Permutation>(Permutation::identity(n), 1)}; }
  static GroupAlgElem of(const Permutation& p, const Rational& c = 1) {
    return {p.size(), LinComb<Permutation>(p, c)};
  }

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  GroupAlgElem& operator-=(const GroupAlgElem& o);
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  friend GroupAlgElem operator-(GroupAlgElem a, const GroupAlgElem& b) { return a -= b; }
  friend GroupAlgElem operator*(const Rational& s, GroupAlgElem a) { a.terms *= s; return a; }
  /// Convolution product.
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend bool operator==(const GroupAlgElem& a, const GroupAlgElem& b) {
    return a.n == b.n && a.terms == b.terms;
  }
  bool is_zero() const { return terms.is_zero(); }
};

GroupAlgElem symmetrizer(int n);
GroupAlgElem adjacent_transposition(int n, int i);

/// a_1..a_{n-1} with sum_i (1 - tau_i) a_i = 1 - pi_n. Each g is written as a
/// bubble-sort word and 1 - g telescoped over that word.
std::vector<GroupAlgElem> ideal_decomposition(int n);

/// sum_i (1 - tau_i) a_i, for checking any candidate decomposition.
GroupAlgElem recombine_decomposition(int n, const std::vector<GroupAlgElem>& a);

/// "3/2*[0 2 1] + ..." (one-line, 0-based), "0" for the zero element.
std::string to_string(const GroupAlgElem& x);

}  // namespace pbw
