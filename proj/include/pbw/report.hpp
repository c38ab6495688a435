#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pbw/io.hpp"

namespace pbw {

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

struct CheckResult {
  std::string check;
  Status status = Status::Pass;
  json detail = json::object();  ///< carries a witness on failure
};

struct RunReport {
  std::string command;
  json inputs = json::object();
  json output = json::object();  ///< command payload, if any
  std::vector<CheckResult> results;

  int exit_status() const;  ///< 0 iff no check failed
  json to_json() const;
};

// Each check walks every basis instance up to the stated bound and stops at
// the first mismatch, which it records as the witness.
CheckResult check_lie_result(const LieAlg& g);
CheckResult check_oracle_equivalence(const LieAlg& g, int N);
CheckResult check_associativity(const LieAlg& g, int max_total);
CheckResult check_phi_todd(const LieAlg& g, int max_n);
CheckResult check_structure_contracts(const LieAlg& g, int max_p);
CheckResult check_structure_recursion(const LieAlg& g, int max_p);
CheckResult check_trace_identity(const LieAlg& g, int max_n, int max_p);
CheckResult check_bullet_epsilon(const LieAlg& g, int max_p);
CheckResult check_omega_bullet(const LieAlg& g, int max_n, int max_p);
CheckResult check_duflo_invariance(const LieAlg& g, int N);
/// Recursion against closed form with the projection top, for 1 <= ell <= max_ell.
CheckResult check_torsion_closed_form(const LieAlg& g, int max_ell);
/// Factorization through S^{ell+1} V of the solved morphism for the invariant tops.
CheckResult check_torsion_factorization(const LieAlg& g, int max_ell);

/// reductive, tame, induced_lie, module_axioms, section, antimorphism; the
/// later ones are skipped when the pair is not tame.
std::vector<CheckResult> check_triple(const TripleSpec& t, int N);

/// The full battery; everything after the Lie check is skipped when the
/// bracket is not Lie.
std::vector<CheckResult> verify_all(const LieAlg& g, int N, const std::optional<TripleSpec>& triple);

}  // namespace pbw
