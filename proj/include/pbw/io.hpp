#pragma once

#include <string>

#include <json.hpp>

#include "pbw/tamepair.hpp"

namespace pbw {

using json = nlohmann::json;

/// {"name", "basis": [{"name", "degree"}], "brackets": [{"left", "right", "result": [{"basis", "coeff"}]}]}.
/// A coefficient is an integer or a "p/q" string. Errors are PbwError(ConfigError).
LieAlg algebra_from_json(const json& j);
/// Lists [a,b] for a <= b only; reloading fills the rest by antisymmetry.
json algebra_to_json(const LieAlg& g);

/// Algebra fields plus "subalgebra" and "complement" name lists.
TripleSpec triple_from_json(const json& j);
json triple_to_json(const TripleSpec& t);

/// Reads and parses a file; unreadable files and bad JSON are ConfigErrors.
json read_json_file(const std::string& path);
LieAlg load_algebra(const std::string& path);
TripleSpec load_triple(const std::string& path);

/// {"x*y": "1/2", "1": "-3"} with monomials in canonical order.
json sym_to_json(const GradedSpace& V, const SymElem& a);
json vec_to_json(const GradedSpace& V, const Vec& v);
std::string monomial_name(const GradedSpace& V, const Word& w);

}  // namespace pbw
