#include "pbw/report.hpp"

#include <algorithm>

#include "pbw/duflo.hpp"

namespace pbw {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

int RunReport::exit_status() const {
  for (const auto& r : results)
    if (r.status == Status::Fail) return 1;
  return 0;
}

json RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["inputs"] = inputs;
  if (!output.empty()) j["output"] = output;
  j["results"] = json::array();
  for (const auto& r : results) j["results"].push_back({{"check", r.check}, {"status", status_name(r.status)}, {"detail", r.detail}});
  j["exit_status"] = exit_status();
  return j;
}

namespace {

CheckResult pass(std::string name, json detail = json::object()) { return {std::move(name), Status::Pass, std::move(detail)}; }
CheckResult fail(std::string name, json detail) { return {std::move(name), Status::Fail, std::move(detail)}; }

std::string mono(const GradedSpace& V, const Word& w) { return monomial_name(V, w); }

std::string letters(const GradedSpace& V, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "(x)" : "") + V.name(w[i]);
  return s;
}

}  // namespace

CheckResult check_lie_result(const LieAlg& g) {
  auto c = check_lie(g);
  if (c.ok) return pass("lie");
  return fail("lie", {{"code", error_code_name(*c.code)}, {"witness", c.witness}, {"message", c.message}});
}

CheckResult check_oracle_equivalence(const LieAlg& g, int N) {
  const GradedSpace& V = g.space();
  auto monos = sym_basis_upto(V, N);
  int pairs = 0;
  for (const auto& a : monos)
    for (const auto& b : monos) {
      if (static_cast<int>(a.size() + b.size()) > N) continue;
      ++pairs;
      SymElem x(a, 1), y(b, 1);
      SymElem s = star_multiply(g, N, x, y), o = pbw_oracle_multiply(g, N, x, y);
      if (s != o)
        return fail("oracle_equivalence", {{"left", mono(V, a)}, {"right", mono(V, b)}, {"star", sym_to_json(V, s)}, {"oracle", sym_to_json(V, o)}});
    }
  return pass("oracle_equivalence", {{"pairs", pairs}, {"max_degree", N}});
}

CheckResult check_associativity(const LieAlg& g, int max_total) {
  const GradedSpace& V = g.space();
  auto monos = sym_basis_upto(V, max_total);
  int triples = 0;
  for (const auto& a : monos)
    for (const auto& b : monos)
      for (const auto& c : monos) {
        if (static_cast<int>(a.size() + b.size() + c.size()) > max_total) continue;
        ++triples;
        SymElem x(a, 1), y(b, 1), z(c, 1);
        SymElem l = star_multiply(g, max_total, star_multiply(g, max_total, x, y), z);
        SymElem r = star_multiply(g, max_total, x, star_multiply(g, max_total, y, z));
        if (l != r)
          return fail("associativity", {{"triple", {mono(V, a), mono(V, b), mono(V, c)}}, {"difference", sym_to_json(V, l - r)}});
      }
  return pass("associativity", {{"triples", triples}, {"max_degree", max_total}});
}

CheckResult check_phi_todd(const LieAlg& g, int max_n) {
  const GradedSpace& V = g.space();
  for (int n = 0; n <= max_n; ++n)
    for (const auto& a : symmetric_basis(V, n))
      for (int v = 0; v < g.dim(); ++v) {
        SymElem phi = phi_todd(g, a, v), star = star_multiply(g, n + 1, SymElem(a, 1), SymElem(Word{v}, 1));
        if (phi != star)
          return fail("phi_todd", {{"monomial", mono(V, a)}, {"letter", V.name(v)}, {"difference", sym_to_json(V, phi - star)}});
      }
  return pass("phi_todd", {{"max_n", max_n}});
}

CheckResult check_structure_contracts(const LieAlg& g, int max_p) {
  const GradedSpace& V = g.space();
  for (int p = 1; p <= max_p; ++p) {
    auto top = structure_coefficients(g, p, p);
    for (const auto& w : tensor_basis(V, p)) {
      auto [s, m] = canonicalize(V, w);
      if (top.apply(w) != (s == 0 ? SymElem{} : SymElem(m, s)))
        return fail("structure_contracts", {{"rule", "c_p^p = pi_p"}, {"p", p}, {"input", letters(V, w)}});
    }
    for (int k = 1; k < p; ++k) {
      auto c = structure_coefficients(g, p, k);
      for (const auto& m : symmetric_basis(V, p))
        if (!c.apply(koszul_act(V, symmetrizer(p), TensorElem(m, 1))).is_zero())
          return fail("structure_contracts", {{"rule", "c_p^k vanishes on S^p"}, {"p", p}, {"k", k}, {"input", mono(V, m)}});
    }
  }
  if (max_p >= 2) {
    auto c21 = structure_coefficients(g, 2, 1);
    for (const auto& w : tensor_basis(V, 2)) {
      SymElem expected;
      for (const auto& [k, c] : g.bracket(w[0], w[1])) expected.add(Word{k}, c / 2);
      if (c21.apply(w) != expected) return fail("structure_contracts", {{"rule", "c_2^1 = mu/2"}, {"input", letters(V, w)}});
    }
  }
  return pass("structure_contracts", {{"max_p", max_p}});
}

CheckResult check_structure_recursion(const LieAlg& g, int max_p) {
  for (int p = 2; p <= max_p; ++p)
    for (int k = 1; k <= p; ++k)
      if (!structure_recursion_check(g, p, k)) return fail("structure_recursion", {{"p", p}, {"k", k}});
  return pass("structure_recursion", {{"max_p", max_p}});
}

CheckResult check_trace_identity(const LieAlg& g, int max_n, int max_p) {
  for (int n = 1; n <= max_n; ++n)
    for (int p = 1; p <= std::min(n, max_p); ++p)
      if (!trace_identity_check(g, n, p)) return fail("trace_identity", {{"n", n}, {"p", p}});
  return pass("trace_identity", {{"max_n", max_n}, {"max_p", max_p}});
}

CheckResult check_bullet_epsilon(const LieAlg& g, int max_p) {
  for (int p = 1; p <= max_p; ++p)
    if (!bullet_epsilon_check(g, p)) return fail("bullet_epsilon", {{"p", p}});
  return pass("bullet_epsilon", {{"max_p", max_p}});
}

CheckResult check_omega_bullet(const LieAlg& g, int max_n, int max_p) {
  const GradedSpace& V = g.space();
  for (int n = 0; n <= max_n; ++n)
    for (const auto& a : symmetric_basis(V, n))
      for (int v = 0; v < g.dim(); ++v)
        for (int p = 0; p <= max_p; ++p)
          if (omega_power(g, p, SymVecElem({a, v}, 1)) != contracted_bullet(g, a, p, v))
            return fail("omega_bullet", {{"monomial", mono(V, a)}, {"letter", V.name(v)}, {"p", p}});
  return pass("omega_bullet", {{"max_n", max_n}, {"max_p", max_p}});
}

CheckResult check_duflo_invariance(const LieAlg& g, int N) {
  const GradedSpace& V = g.space();
  auto d = duflo_element(g, N);
  for (int p = 1; p <= N; ++p)
    for (int z = 0; z < g.dim(); ++z)
      for (const auto& m : symmetric_basis(V, p))
        if (!contract(V, derivation_action(g, z, SymElem(m, 1)), d.components[p]).is_zero())
          return fail("duflo_invariance", {{"p", p}, {"acting", V.name(z)}, {"monomial", mono(V, m)}});
  return pass("duflo_invariance", {{"max_p", N}});
}

CheckResult check_torsion_closed_form(const LieAlg& g, int max_ell) {
  const GradedSpace& V = g.space();
  for (int ell = 1; ell <= max_ell; ++ell) {
    auto top = top_projection(g, ell);
    auto rec = torsion_solve(g, ell, top, ell + 1);
    auto closed = torsion_closed_form(g, ell, top);
    for (const auto& x : top.domain)
      if (rec.total(x) != closed.total(x))
        return fail("torsion_closed_form", {{"ell", ell}, {"source", letters(V, x)}, {"recursion", sym_to_json(V, rec.total(x))}, {"closed_form", sym_to_json(V, closed.total(x))}});
  }
  return pass("torsion_closed_form", {{"max_ell", max_ell}});
}

CheckResult check_torsion_factorization(const LieAlg& g, int max_ell) {
  const GradedSpace& V = g.space();
  json tested = json::array();
  for (int ell = 1; ell <= max_ell; ++ell) {
    auto top = top_invariants(g, ell);
    if (top.domain.empty()) continue;
    auto a = torsion_solve(g, ell, top, ell + 1);
    tested.push_back(ell);
    if (auto d = torsion_defect(g, a)) {
      json detail = {{"ell", ell},
                     {"top", sym_to_json(V, top.apply(d->source))},
                     {"solved", sym_to_json(V, a.total(d->source))},
                     {"letter", V.name(d->letter)},
                     {"degree", d->degree},
                     {"piece", sym_to_json(V, d->piece)}};
      auto space = torsion_space(g, ell);
      detail["exact_torsion_dim"] = space.size();
      if (space.size() == 1) detail["exact_torsion_element"] = sym_to_json(V, space[0]);
      return fail("torsion_factorization", detail);
    }
  }
  return pass("torsion_factorization", {{"levels_with_invariant_tops", tested}});
}

std::vector<CheckResult> check_triple(const TripleSpec& t, int N) {
  std::vector<CheckResult> out;
  auto red = check_reductive(t);
  out.push_back(red.ok ? pass("reductive") : fail("reductive", {{"witness", red.witness}, {"message", red.message}}));
  if (!red.ok) {
    for (const char* name : {"tame", "induced_lie", "module_axioms", "section", "antimorphism"})
      out.push_back({name, Status::Skip, {{"reason", "not reductive"}}});
    return out;
  }
  auto tame = check_tame(t);
  out.push_back(tame.ok ? pass("tame") : fail("tame", {{"witness", tame.witness}, {"message", tame.message}}));
  if (!tame.ok) {
    out.push_back({"induced_lie", Status::Skip, {{"reason", "not tame"}}});
    json axioms = json::array();
    for (const auto& r : module_axiom_check(t, N))
      axioms.push_back({{"group", r.group}, {"ok", r.ok}, {"witness", r.witness}});
    out.push_back({"module_axioms", Status::Skip, {{"reason", "not tame"}, {"groups", axioms}}});
    out.push_back({"section", Status::Skip, {{"reason", "not tame"}}});
    out.push_back({"antimorphism", Status::Skip, {{"reason", "not tame"}}});
    return out;
  }
  auto lie = check_lie(induced_bracket(t));
  out.push_back(lie.ok ? pass("induced_lie") : fail("induced_lie", {{"message", lie.message}}));
  CheckResult axioms = pass("module_axioms");
  for (const auto& r : module_axiom_check(t, N))
    if (!r.ok) {
      axioms = fail("module_axioms", {{"group", r.group}, {"witness", r.witness}});
      break;
    }
  out.push_back(axioms);
  auto sec = delta_section_check(t, N);
  json rows = json::array();
  for (const auto& row : dimension_identity(t, N)) rows.push_back({{"p", row.p}, {"lhs", row.lhs}, {"rhs", row.rhs}});
  json sd = {{"section", sec.section}, {"dimensions", sec.dimensions}, {"rows", rows}};
  if (!sec.witness.empty()) sd["witness"] = sec.witness;
  out.push_back(sec.section && sec.dimensions ? pass("section", sd) : fail("section", sd));
  auto anti = antimorphism_check(t, N);
  json ad = {{"pairs", anti.pairs}};
  if (!anti.ok) ad["witness"] = anti.witness;
  out.push_back(anti.ok ? pass("antimorphism", ad) : fail("antimorphism", ad));
  return out;
}

std::vector<CheckResult> verify_all(const LieAlg& g, int N, const std::optional<TripleSpec>& triple) {
  std::vector<CheckResult> out;
  out.push_back(check_lie_result(g));
  if (out.back().status == Status::Fail) {
    for (const char* name : {"oracle_equivalence", "associativity", "phi_todd", "structure_contracts", "structure_recursion",
                             "trace_identity", "bullet_epsilon", "omega_bullet", "duflo_invariance", "torsion_closed_form",
                             "torsion_factorization"})
      out.push_back({name, Status::Skip, {{"reason", "bracket is not Lie"}}});
  } else {
    out.push_back(check_oracle_equivalence(g, N));
    out.push_back(check_associativity(g, std::min(N, 3)));
    out.push_back(check_phi_todd(g, std::min(N - 1, 3)));
    out.push_back(check_structure_contracts(g, std::min(N, 4)));
    out.push_back(check_structure_recursion(g, std::min(N, 4)));
    out.push_back(check_trace_identity(g, std::min(N, 3), 2));
    out.push_back(check_bullet_epsilon(g, 2));
    out.push_back(check_omega_bullet(g, std::min(N, 3), 3));
    out.push_back(check_duflo_invariance(g, std::min(N, 3)));
    out.push_back(check_torsion_closed_form(g, std::min(N - 1, 3)));
    out.push_back(check_torsion_factorization(g, std::min(N - 1, 3)));
  }
  if (triple) {
    auto t = check_triple(*triple, N);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

}  // namespace pbw
