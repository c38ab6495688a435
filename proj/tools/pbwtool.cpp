// pbwtool: exact checks for enveloping algebras realized on S(g).
// JSON reports go to stdout, progress to stderr. Exit 0 = all checks passed,
// 1 = some check failed, 2 = usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "pbw/duflo.hpp"
#include "pbw/report.hpp"
#include "pbw/symgroup.hpp"

using namespace pbw;

namespace {

constexpr int kTruncCeiling = 6;

struct Globals {
  bool pretty = false;
  bool allow_large = false;
};

void log(const std::string& msg) { std::cerr << "[pbwtool] " << msg << "\n"; }

void check_size(const Globals& g, const char* what, int value) {
  if (value < 0) throw CLI::ValidationError(what, "must be nonnegative");
  if (value > kTruncCeiling && !g.allow_large)
    throw CLI::ValidationError(what, "exceeds " + std::to_string(kTruncCeiling) + "; pass --allow-large to override");
}

std::string dual_name(const GradedSpace& V, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + V.name(w[i]) + "*";
  return s;
}

json dual_to_json(const GradedSpace& V, const DualElem& d) {
  json j = json::object();
  for (const auto& [w, c] : d) j[dual_name(V, w)] = to_string(c);
  return j;
}

json free_lie_to_json(const FreeLieElem& x, const std::vector<std::string>& letters) {
  json j = json::array();
  for (const auto& [w, c] : x.terms) j.push_back({{"bracket", lyndon_bracket_string(w, letters)}, {"coeff", to_string(c)}});
  return j;
}

std::string tensor_name(const GradedSpace& V, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "(x)" : "") + V.name(w[i]);
  return s.empty() ? "1" : s;
}

void render_pretty(const RunReport& r) {
  std::cout << "command: " << r.command << "\n";
  if (!r.inputs.empty()) std::cout << "inputs: " << r.inputs.dump() << "\n";
  if (!r.output.empty()) std::cout << r.output.dump(2) << "\n";
  for (const auto& c : r.results) {
    std::cout << "  " << status_name(c.status) << "  " << c.check;
    if (!c.detail.empty()) std::cout << "  " << c.detail.dump();
    std::cout << "\n";
  }
  std::cout << "exit status: " << r.exit_status() << "\n";
}

int emit(const Globals& g, const RunReport& r) {
  for (const auto& c : r.results) log(r.command + ": " + c.check + " " + status_name(c.status));
  if (g.pretty)
    render_pretty(r);
  else
    std::cout << r.to_json().dump(2) << "\n";
  return r.exit_status();
}

LinearMap<Word, Word> parse_top(const LieAlg& alg, int ell, const std::string& spec) {
  if (spec == "identity") {
    if (ell != 1) throw CLI::ValidationError("--top", "identity top needs --ell 1");
    return top_identity(alg);
  }
  if (spec == "projection") return top_projection(alg, ell);
  return top_invariants(alg, ell);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact PBW, star-product, Duflo and tame-pair computations"};
  app.require_subcommand(1);
  Globals glob;
  app.add_flag("--pretty", glob.pretty, "Human-readable tables instead of JSON");
  app.add_flag("--allow-large", glob.allow_large, "Allow truncations above 6");

  std::string algebra_file, triple_file, suite = "all", top_spec = "invariants";
  int trunc = 4, degree = 4, p = 2, q = 1, ell = 1, n = 3;
  std::optional<int> torsion_trunc;
  bool oracle = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check that a bracket is a Lie superbracket");
  validate_cmd->add_option("--algebra", algebra_file, "Algebra JSON")->required();

  auto* bch_cmd = app.add_subcommand("bch", "BCH series log(e^x e^y) in Lyndon brackets");
  bch_cmd->add_option("--degree", degree, "Highest degree")->capture_default_str();

  auto* mbrace_cmd = app.add_subcommand("mbrace", "Multibrace M_{p,q} in Lyndon brackets");
  mbrace_cmd->add_option("--p", p)->required();
  mbrace_cmd->add_option("--q", q)->required();

  auto* star_cmd = app.add_subcommand("star", "Star-product multiplication table on monomials");
  star_cmd->add_option("--algebra", algebra_file)->required();
  star_cmd->add_option("--trunc", trunc)->capture_default_str();
  star_cmd->add_flag("--oracle", oracle, "Compare against PBW normal ordering");

  auto* coeffs_cmd = app.add_subcommand("pbw-coeffs", "Structure coefficients c_p^k");
  coeffs_cmd->add_option("--algebra", algebra_file)->required();
  coeffs_cmd->add_option("--p", p)->required();

  auto* duflo_cmd = app.add_subcommand("duflo", "Duflo element components");
  duflo_cmd->add_option("--algebra", algebra_file)->required();
  duflo_cmd->add_option("--trunc", trunc)->capture_default_str();

  auto* torsion_cmd = app.add_subcommand("torsion", "Solve for an ell-torsion morphism from its top");
  torsion_cmd->add_option("--algebra", algebra_file)->required();
  torsion_cmd->add_option("--ell", ell)->required();
  torsion_cmd->add_option("--top", top_spec, "identity | projection | invariants")
      ->check(CLI::IsMember({"identity", "projection", "invariants"}))
      ->capture_default_str();
  torsion_cmd->add_option("--trunc", torsion_trunc, "Defaults to ell + 1");

  auto* tame_cmd = app.add_subcommand("tame", "Reductive, tame and module checks for a triple");
  tame_cmd->add_option("--triple", triple_file)->required();
  tame_cmd->add_option("--trunc", trunc)->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant battery");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all"}))->capture_default_str();
  verify_cmd->add_option("--algebra", algebra_file)->required();
  verify_cmd->add_option("--trunc", trunc)->capture_default_str();
  verify_cmd->add_option("--triple", triple_file, "Also check this triple");

  auto* symgroup_cmd = app.add_subcommand("symgroup", "Decomposition of 1 - pi_n in the ideal of the tau_i");
  symgroup_cmd->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  RunReport report;
  try {
    if (*validate_cmd) {
      report.command = "validate";
      report.inputs["algebra"] = algebra_file;
      LieAlg g = load_algebra(algebra_file);
      json basis = json::array();
      for (const auto& b : g.space().basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
      report.output = {{"name", g.name()}, {"dim", g.dim()}, {"basis", basis}, {"algebra", algebra_to_json(g)}};
      report.results.push_back(check_lie_result(g));
    } else if (*bch_cmd) {
      check_size(glob, "--degree", degree);
      report.command = "bch";
      report.inputs["degree"] = degree;
      FreeLieElem z = bch(degree);
      report.output["terms"] = free_lie_to_json(z, {"x", "y"});
      bool same = z == bch_by_recursion(degree);
      report.results.push_back({"dynkin_vs_recursion", same ? Status::Pass : Status::Fail, {{"degree", degree}}});
    } else if (*mbrace_cmd) {
      if (p < 0 || q < 0) throw CLI::ValidationError("--p/--q", "must be nonnegative");
      check_size(glob, "--p + --q", p + q);
      report.command = "mbrace";
      report.inputs = {{"p", p}, {"q", q}};
      std::vector<std::string> letters;
      for (int i = 1; i <= p; ++i) letters.push_back("x" + std::to_string(i));
      for (int j = 1; j <= q; ++j) letters.push_back(q == 1 ? "y" : "y" + std::to_string(j));
      FreeLieElem m = mbrace(p, q);
      report.output["terms"] = free_lie_to_json(m, letters);
      if (q == 1 && p >= 1) {
        bool same = m == mbrace_p1_closed(p);
        report.results.push_back({"p1_closed_form", same ? Status::Pass : Status::Fail, json::object()});
      }
    } else if (*star_cmd) {
      check_size(glob, "--trunc", trunc);
      report.command = "star";
      report.inputs = {{"algebra", algebra_file}, {"trunc", trunc}, {"oracle", oracle}};
      LieAlg g = validate(load_algebra(algebra_file));
      const GradedSpace& V = g.space();
      json table = json::array();
      auto monos = sym_basis_upto(V, trunc);
      for (const auto& a : monos)
        for (const auto& b : monos)
          if (static_cast<int>(a.size() + b.size()) <= trunc)
            table.push_back({{"left", monomial_name(V, a)},
                             {"right", monomial_name(V, b)},
                             {"product", sym_to_json(V, star_multiply(g, trunc, SymElem(a, 1), SymElem(b, 1)))}});
      report.output["table"] = table;
      if (oracle) report.results.push_back(check_oracle_equivalence(g, trunc));
    } else if (*coeffs_cmd) {
      if (p < 1) throw CLI::ValidationError("--p", "must be at least 1");
      check_size(glob, "--p", p);
      report.command = "pbw-coeffs";
      report.inputs = {{"algebra", algebra_file}, {"p", p}};
      LieAlg g = validate(load_algebra(algebra_file));
      const GradedSpace& V = g.space();
      for (int k = 1; k <= p; ++k) {
        auto c = structure_coefficients(g, p, k);
        json m = json::object();
        for (const auto& w : c.domain) {
          SymElem img = c.apply(w);
          if (!img.is_zero()) m[tensor_name(V, w)] = sym_to_json(V, img);
        }
        report.output[std::to_string(k)] = m;
      }
      report.results.push_back(check_structure_contracts(g, p));
      report.results.push_back(check_structure_recursion(g, p));
    } else if (*duflo_cmd) {
      check_size(glob, "--trunc", trunc);
      report.command = "duflo";
      report.inputs = {{"algebra", algebra_file}, {"trunc", trunc}};
      LieAlg g = validate(load_algebra(algebra_file));
      auto d = duflo_element(g, trunc);
      for (int i = 0; i <= trunc; ++i) report.output[std::to_string(i)] = dual_to_json(g.space(), d.components[i]);
      report.results.push_back(check_duflo_invariance(g, trunc));
    } else if (*torsion_cmd) {
      const int N = torsion_trunc.value_or(ell + 1);
      check_size(glob, "--trunc", N);
      if (ell < 0) throw CLI::ValidationError("--ell", "must be nonnegative");
      report.command = "torsion";
      report.inputs = {{"algebra", algebra_file}, {"ell", ell}, {"top", top_spec}, {"trunc", N}};
      LieAlg g = validate(load_algebra(algebra_file));
      const GradedSpace& V = g.space();
      auto top = parse_top(g, ell, top_spec);
      auto a = torsion_solve(g, ell, top, N);
      auto closed = torsion_closed_form(g, ell, top);
      json comps = json::array();
      bool equal = true;
      for (const auto& x : a.source) {
        json per = json::object();
        for (int k = 0; k <= ell; ++k) per[std::to_string(k)] = sym_to_json(V, a.components[k].apply(x));
        comps.push_back({{"source", top_spec == "invariants" ? "inv" + std::to_string(x[0]) : tensor_name(V, x)}, {"a", per}});
        equal = equal && a.total(x) == closed.total(x);
      }
      report.output["components"] = comps;
      report.results.push_back({"closed_form", equal ? Status::Pass : Status::Fail, json::object()});
      if (a.source.empty()) {
        report.results.push_back({"factorization", Status::Skip, {{"reason", "empty top"}}});
      } else if (auto d = torsion_defect(g, a)) {
        report.results.push_back({"factorization",
                                  Status::Fail,
                                  {{"source", tensor_name(V, d->source)},
                                   {"letter", V.name(d->letter)},
                                   {"degree", d->degree},
                                   {"piece", sym_to_json(V, d->piece)}}});
      } else {
        report.results.push_back({"factorization", Status::Pass, json::object()});
      }
      json space = json::array();
      for (const auto& t : torsion_space(g, ell)) space.push_back(sym_to_json(V, t));
      report.output["exact_torsion_space"] = space;
    } else if (*tame_cmd) {
      check_size(glob, "--trunc", trunc);
      report.command = "tame";
      report.inputs = {{"triple", triple_file}, {"trunc", trunc}};
      TripleSpec t = load_triple(triple_file);
      report.results = check_triple(t, trunc);
      for (const auto& r : report.results) {
        report.output[r.check] = r.status == Status::Pass ? json(true) : r.status == Status::Fail ? json(false) : json(nullptr);
        if (r.status == Status::Fail && r.detail.contains("witness") && !report.output.contains("witness"))
          report.output["witness"] = r.detail["witness"];
      }
    } else if (*verify_cmd) {
      check_size(glob, "--trunc", trunc);
      report.command = "verify";
      report.inputs = {{"suite", suite}, {"algebra", algebra_file}, {"trunc", trunc}};
      if (!triple_file.empty()) report.inputs["triple"] = triple_file;
      LieAlg g = load_algebra(algebra_file);
      std::optional<TripleSpec> t;
      if (!triple_file.empty()) t = load_triple(triple_file);
      report.results = verify_all(g, trunc, t);
    } else if (*symgroup_cmd) {
      if (n < 2) throw CLI::ValidationError("--n", "must be at least 2");
      check_size(glob, "--n", n);
      report.command = "symgroup";
      report.inputs["n"] = n;
      auto a = ideal_decomposition(n);
      for (std::size_t i = 0; i < a.size(); ++i) report.output["a" + std::to_string(i + 1)] = to_string(a[i]);
      bool ok = recombine_decomposition(n, a) == GroupAlgElem::one(n) - symmetrizer(n);
      report.results.push_back({"decomposition", ok ? Status::Pass : Status::Fail, json::object()});
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "pbwtool: " << e.what() << "\n";
    return 2;
  } catch (const PbwError& e) {
    log(std::string(error_code_name(e.code())) + ": " + e.what());
    std::cout << json{{"command", report.command}, {"error", error_code_name(e.code())}, {"message", e.what()}, {"witness", e.witness()}}.dump(2) << "\n";
    return 2;
  }
  return emit(glob, report);
}
