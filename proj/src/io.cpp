#include "pbw/io.hpp"

#include <fstream>
#include <sstream>

namespace pbw {

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw PbwError(ErrorCode::ConfigError, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) config_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) config_error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Rational parse_coeff(const json& c) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (c.is_string()) {
    try {
      return parse_rational(c.get<std::string>());
    } catch (const std::invalid_argument& e) {
      config_error(e.what());
    }
  }
  config_error("coefficient must be an integer or a \"p/q\" string, got " + c.dump());
}

std::vector<std::string> name_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) config_error(std::string("field '") + key + "' must be a list of names");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) config_error(std::string("field '") + key + "' must be a list of names");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

LieAlg algebra_from_json(const json& j) {
  std::string name = string_field(j, "name");
  const json& basis_j = field(j, "basis");
  if (!basis_j.is_array() || basis_j.empty()) config_error("'basis' must be a nonempty list");
  std::vector<BasisVector> basis;
  for (const auto& b : basis_j) {
    int degree = 0;
    if (b.contains("degree")) {
      if (!b.at("degree").is_number_integer()) config_error("basis degree must be an integer");
      degree = b.at("degree").get<int>();
    }
    basis.push_back({string_field(b, "name"), degree});
  }
  std::vector<BracketEntry> entries;
  if (j.contains("brackets")) {
    const json& br = j.at("brackets");
    if (!br.is_array()) config_error("'brackets' must be a list");
    for (const auto& e : br) {
      BracketEntry entry{string_field(e, "left"), string_field(e, "right"), {}};
      const json& res = field(e, "result");
      if (!res.is_array()) config_error("bracket 'result' must be a list");
      for (const auto& term : res) entry.result.emplace_back(string_field(term, "basis"), parse_coeff(field(term, "coeff")));
      entries.push_back(std::move(entry));
    }
  }
  try {
    return make_algebra(name, basis, entries);
  } catch (const std::invalid_argument& e) {
    config_error(e.what());
  }
}

json algebra_to_json(const LieAlg& g) {
  const GradedSpace& V = g.space();
  json j;
  j["name"] = g.name();
  j["basis"] = json::array();
  for (const auto& b : V.basis()) j["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  j["brackets"] = json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      const Vec& v = g.bracket(a, b);
      if (v.is_zero()) continue;
      json res = json::array();
      for (const auto& [k, c] : v) res.push_back({{"basis", V.name(k)}, {"coeff", to_string(c)}});
      j["brackets"].push_back({{"left", V.name(a)}, {"right", V.name(b)}, {"result", res}});
    }
  return j;
}

TripleSpec triple_from_json(const json& j) {
  LieAlg g = algebra_from_json(j);
  return make_triple(g, name_list(j, "subalgebra"), name_list(j, "complement"));
}

json triple_to_json(const TripleSpec& t) {
  json j = algebra_to_json(t.ambient);
  j["subalgebra"] = json::array();
  j["complement"] = json::array();
  for (int i : t.sub) j["subalgebra"].push_back(t.ambient.space().name(i));
  for (int i : t.complement) j["complement"].push_back(t.ambient.space().name(i));
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    config_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

LieAlg load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }
TripleSpec load_triple(const std::string& path) { return triple_from_json(read_json_file(path)); }

std::string monomial_name(const GradedSpace& V, const Word& w) { return w.empty() ? "1" : word_to_string(V, w); }

json sym_to_json(const GradedSpace& V, const SymElem& a) {
  json j = json::object();
  for (const auto& [w, c] : a) j[monomial_name(V, w)] = to_string(c);
  return j;
}

json vec_to_json(const GradedSpace& V, const Vec& v) {
  json j = json::object();
  for (const auto& [k, c] : v) j[V.name(k)] = to_string(c);
  return j;
}

}  // namespace pbw
