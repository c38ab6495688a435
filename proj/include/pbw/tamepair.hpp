#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbw/ualg.hpp"

namespace pbw {

/// g = h + n as spaces; indices refer to the ambient basis, in ambient order.
struct TripleSpec {
  LieAlg ambient;
  std::vector<int> sub;         ///< h
  std::vector<int> complement;  ///< n
};

/// Throws PbwError(ConfigError) unless the two name lists partition the basis.
TripleSpec make_triple(const LieAlg& g, const std::vector<std::string>& sub, const std::vector<std::string>& complement);

struct PairCheck {
  bool ok = true;
  std::vector<std::string> witness;  ///< basis names
  std::string message;
};

/// h closed under the bracket and pi_h [h, n] = 0.
PairCheck check_reductive(const TripleSpec& t);
/// [beta(n1, n2), n3] = 0 for all basis triples of n, with beta = pi_h mu.
PairCheck check_tame(const TripleSpec& t);

Vec project_sub(const TripleSpec& t, const Vec& v);         ///< pi_h, ambient indices
Vec project_complement(const TripleSpec& t, const Vec& v);  ///< pi_n, ambient indices

/// pi_n mu on n as a Lie algebra with basis indices 0..|n|-1.
/// Throws PbwError(TamenessRequired) unless tame.
LieAlg induced_bracket(const TripleSpec& t);

/// Action of g on U(n) = S(n) at truncation N: ambient basis x acts by
/// x * u for x in n and by the derivation extending ad_x for x in h.
class NModule {
 public:
  /// Requires a reductive pair; tameness is not checked here so that the
  /// axiom failures of a non-tame pair can be inspected.
  NModule(const TripleSpec& t, int N);

  const LieAlg& n() const { return n_; }
  int trunc() const { return N_; }
  SymElem act(int x, const SymElem& u) const;
  SymElem act(const Vec& x, const SymElem& u) const;
  /// Left action of a U(g) element on u, word letters applied right to left.
  SymElem act(const UEnvElem& w, const SymElem& u) const;
  /// ambient index -> index in n, or -1
  int local(int x) const { return local_[x]; }

 private:
  TripleSpec t_;
  LieAlg n_;
  int N_;
  std::vector<int> local_;
};

struct ModuleAxiomReport {
  bool ok = true;
  std::string group;  ///< "nn", "nh" or "hh"
  std::vector<std::string> witness;  ///< x, y and the monomial acted on
  SymElem defect;
};

/// a([x,y]) u == a(x) a(y) u - (+-) a(y) a(x) u for every pair of ambient basis
/// vectors and every monomial u of degree <= N-2, grouped by where x and y live.
/// Throws PbwError(TamenessRequired) when the pair is not reductive.
std::vector<ModuleAxiomReport> module_axiom_check(const TripleSpec& t, int N);

struct DimensionRow {
  int p = 0;
  long long lhs = 0;  ///< dim S^{<=p} g - dim S^{<=p} n
  long long rhs = 0;  ///< dim h * dim S^{<=p-1} g
};

/// The kernel count for p = 1..N. Only dim h = 1 makes the two sides agree in general.
std::vector<DimensionRow> dimension_identity(const TripleSpec& t, int N);

struct SectionReport {
  bool section = true;
  bool dimensions = true;
  std::vector<std::string> witness;
};

/// delta: S(n) -> U(g) through symmetrized words, followed by the action on 1,
/// must be the identity on S^{<=N}(n). Throws PbwError(TamenessRequired).
SectionReport delta_section_check(const TripleSpec& t, int N);

/// Basis of the h-invariants of S^k(n), n-local indices.
std::vector<SymElem> sub_invariants(const TripleSpec& t, int k);

struct AntimorphismReport {
  bool ok = true;
  int pairs = 0;
  std::vector<std::string> witness;
};

/// f(P * Q) == f(Q) o f(P) for invariant basis pairs, with f(P) = (. * P) on
/// S^{<=N - deg P - deg Q}(n). Throws PbwError(TamenessRequired).
AntimorphismReport antimorphism_check(const TripleSpec& t, int N);

namespace fixtures {
TripleSpec h3_center();   ///< H3 with h = {z}
TripleSpec aff1_pair();   ///< aff(1) with h = {h}
TripleSpec sl2_cartan();  ///< sl2 with h = {h}
TripleSpec sl2_upper();   ///< sl2 with h = {e}, not reductive
TripleSpec semidirect_pair();  ///< d |x H3 with h = {d}
}  // namespace fixtures

}  // namespace pbw
