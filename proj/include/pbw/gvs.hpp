#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbw/lincomb.hpp"
#include "pbw/matrix.hpp"
#include "pbw/symgroup.hpp"

namespace pbw {

struct BasisVector {
  std::string name;
  int degree = 0;
  bool operator==(const BasisVector&) const = default;
};

class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<BasisVector> basis);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisVector>& basis() const { return basis_; }
  const std::string& name(int i) const { return basis_[i].name; }
  int degree(int i) const { return basis_[i].degree; }
  bool odd(int i) const { return (basis_[i].degree % 2) != 0; }
  /// Throws std::out_of_range for unknown names.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const;
  bool operator==(const GradedSpace&) const = default;

 private:
  std::vector<BasisVector> basis_;
};

/// A basis word of V^{\otimes n}: letter indices into the basis of V.
using Word = std::vector<int>;
using TensorElem = LinComb<Word>;
using TensorMap = LinearMap<Word, Word>;

/// All words of length n in lexicographic order.
std::vector<Word> tensor_basis(const GradedSpace& V, int n);

/// (-1)^{|a||b|}.
int koszul_swap_sign(const GradedSpace& V, int a, int b);

/// Signed action of a permutation on a word: the letter in slot i moves to
/// slot g(i); every pair of letters whose order is reversed contributes its
/// Koszul sign.
std::pair<int, Word> koszul_act(const GradedSpace& V, const Permutation& g, const Word& w);
TensorElem koszul_act(const GradedSpace& V, const GroupAlgElem& g, const TensorElem& t);
TensorMap permutation_map(const GradedSpace& V, const GroupAlgElem& g);

/// Sign and sorted letters of a word viewed in S^n V. Returns sign 0 when an
/// odd letter repeats (the image in S^n V is then zero).
std::pair<int, Word> canonicalize(const GradedSpace& V, const Word& w);

/// Sorted words with odd letters appearing at most once: a basis of S^n V.
std::vector<Word> symmetric_basis(const GradedSpace& V, int n);

/// Applies a map on k letters to the letters [slot, slot+k) of every word.
/// Maps are even, so no sign is picked up from the surrounding letters.
TensorElem apply_in_slot(const TensorMap& f, int k, int slot, const TensorElem& t);

/// id^{left} (x) f (x) id^{right} on V^{\otimes(left+k+right)}.
TensorMap tensor_with_identity(const GradedSpace& V, const TensorMap& f, int k, int left, int right);

/// Map composition restricted to the basis of V^{\otimes n}.
TensorMap compose_on(const GradedSpace& V, int n, const TensorMap& outer, const TensorMap& inner);

struct SplitPower {
  int n = 0;
  std::vector<Word> tensor_basis;    ///< basis of V^{\otimes n}
  std::vector<Word> sym_basis;       ///< basis of S^n V (sorted words)
  int dim_lambda = 0;                ///< dim of the kernel of pi_n
  Matrix incl_sym, proj_sym;         ///< S^n V <-> V^{\otimes n}
  Matrix incl_lambda, proj_lambda;   ///< kernel of pi_n <-> V^{\otimes n}
};

/// V^{\otimes n} = S^n V (+) kernel of pi_n, with inclusions and projections
/// satisfying proj o incl = id on each summand and
/// incl_S proj_S + incl_L proj_L = id.
SplitPower split_power(const GradedSpace& V, int n);

/// Basis of Lambda^2 V: (a,b) with a<b standing for e_a e_b - (-1)^{|a||b|} e_b e_a,
/// and (a,a) for odd a standing for e_a e_a.
std::vector<std::pair<int, int>> lambda2_basis(const GradedSpace& V);

/// Basis key for the summand V^{i-1} (x) Lambda^2 V (x) V^{n-i-1}: `word` is a
/// length-n word whose letters at slots block-1, block encode the Lambda^2 pair.
struct BlockWord {
  int block = 0;  ///< 1-based
  Word word;
  auto operator<=>(const BlockWord&) const = default;
};

struct PsiPhi {
  std::vector<BlockWord> block_basis;
  LinearMap<BlockWord, Word> psi;
  LinearMap<Word, BlockWord> phi;
};

/// Psi_n embeds each summand; Phi_n has block i equal to (1 - tau_i) a_i with the
/// a_i of ideal_decomposition, so Psi_n Phi_n = 1 - pi_n.
PsiPhi psi_map(const GradedSpace& V, int n);

/// Coordinates of an element antisymmetric in slots (block-1, block) in the
/// basis of the corresponding summand.
LinComb<BlockWord> antisymmetric_coordinates(const GradedSpace& V, int block, const TensorElem& t);

/// u = a o (a (x) id).
TensorMap alpha_squared(const GradedSpace& V, const TensorMap& alpha);
/// Classical graded Jacobiator u - u tau_2 + u tau_2 tau_1 as a map V^{(x)3} -> V.
TensorMap jacobiator(const GradedSpace& V, const TensorMap& alpha);

struct JacobiWitness {
  std::optional<TensorMap> beta;
  /// First basis word of V^{(x)3} where the Jacobiator is nonzero, if any.
  std::optional<Word> violation;
};

/// Builds beta = (3u - u tau_2 - u tau_2 tau_1)/3 and keeps it iff
/// beta o Psi_3 == (a o (a (x) id), a o (id (x) a)) blockwise.
/// Throws std::invalid_argument if a does not kill S^2 V.
JacobiWitness jacobi_witness(const GradedSpace& V, const TensorMap& alpha);

std::string word_to_string(const GradedSpace& V, const Word& w, const char* sep = "*");

}  // namespace pbw
