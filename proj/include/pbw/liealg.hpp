#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbw/errors.hpp"
#include "pbw/gvs.hpp"

namespace pbw {

/// Element of V as a combination of basis indices.
using Vec = LinComb<int>;
/// Element of S(V*): canonical monomials whose letters i stand for e^i.
using DualElem = LinComb<Word>;
/// Element of S(V*) (x) V.
using DualTensor = LinComb<std::pair<Word, int>>;

/// Finite-dimensional graded Lie algebra given by structure constants. The
/// constructor only checks shapes; `check_lie` decides whether it is Lie.
class LieAlg {
 public:
  LieAlg() = default;
  /// table[a][b] = [e_a, e_b].
  LieAlg(std::string name, GradedSpace V, std::vector<std::vector<Vec>> table);

  const std::string& name() const { return name_; }
  const GradedSpace& space() const { return V_; }
  int dim() const { return V_.dim(); }
  bool odd(int i) const { return V_.odd(i); }

  const Vec& bracket(int a, int b) const { return table_[a][b]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// mu as a map V^{(x)2} -> V.
  TensorMap mu() const;
  /// mu / 2.
  TensorMap alpha() const;
  bool is_abelian() const;
  bool operator==(const LieAlg&) const = default;

 private:
  std::string name_;
  GradedSpace V_;
  std::vector<std::vector<Vec>> table_;
};

struct BracketEntry {
  std::string left, right;
  std::vector<std::pair<std::string, Rational>> result;
};

/// Builds the table from listed brackets. A missing (b,a) is filled in by
/// graded antisymmetry; listing both inconsistently, or naming an unknown
/// basis vector, throws PbwError(ConfigError). Does not check Jacobi.
LieAlg make_algebra(std::string name, std::vector<BasisVector> basis, const std::vector<BracketEntry>& entries);

struct LieCheck {
  bool ok = true;
  std::optional<ErrorCode> code;
  std::vector<std::string> witness;
  std::string message;
};

/// Degree, graded antisymmetry, then Jacobi (classical Jacobiator and the
/// witness construction, which must agree; disagreement throws logic_error).
LieCheck check_lie(const LieAlg& g);
/// Returns g if check_lie passes, otherwise throws PbwError.
LieAlg validate(const LieAlg& g);

/// mu*(v) = sum_i e^i (x) [e_i, v].
DualTensor mu_star(const LieAlg& g, int v);
/// (mu*)^{bullet p}(v) = sum e^{i_1}...e^{i_p} (x) [e_{i_p},[...,[e_{i_1},v]]], p >= 0.
DualTensor mu_star_power(const LieAlg& g, int p, int v);
/// sum_i <x, e^i> [e_i, v]: recontraction of mu*(v) against x.
Vec recontract(const LieAlg& g, int x, const DualTensor& t);

/// nu_k = supertrace of (mu*)^{bullet k}, an element of S^k(V*).
DualElem nu(const LieAlg& g, int k);

/// (mu*)^{bullet p} bullet epsilon, an element of S^{p+1}(V*) (x) V.
DualTensor bullet_epsilon(const LieAlg& g, int p);
bool bullet_epsilon_check(const LieAlg& g, int p);

/// Both sides of the trace identity as maps S^n V -> S^{n-p} V, compared on
/// every basis monomial. Requires n >= p >= 1.
bool trace_identity_check(const LieAlg& g, int n, int p);

/// The coadjoint action of e_z kills nu_k, tested as <ad_z(m), nu_k> = 0 for
/// all monomials m of S^k V.
bool nu_invariance_check(const LieAlg& g, int k);

std::string vec_to_string(const LieAlg& g, const Vec& v);

}  // namespace pbw
