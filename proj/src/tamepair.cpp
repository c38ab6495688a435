#include "pbw/tamepair.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pbw/fixtures.hpp"
#include "pbw/matrix.hpp"

namespace pbw {

namespace {

std::string show(const GradedSpace& V, const Vec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    Rational a = abs(c);
    if (a != 1) s += to_string(a) + "*";
    s += V.name(k);
  }
  return s;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Vec restrict_to(const Vec& v, const std::vector<int>& keep) {
  return v.filter([&](int k) { return contains(keep, k); });
}

// pi_n mu on n without any tameness requirement.
LieAlg build_induced(const TripleSpec& t) {
  const LieAlg& g = t.ambient;
  std::vector<BasisVector> basis;
  std::map<int, int> local;
  for (int x : t.complement) {
    local[x] = static_cast<int>(basis.size());
    basis.push_back(g.space().basis()[x]);
  }
  const std::size_t n = basis.size();
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [k, c] : project_complement(t, g.bracket(t.complement[a], t.complement[b])))
        table[a][b].add(local.at(k), c);
  std::string name = g.name() + "/";
  for (std::size_t i = 0; i < t.sub.size(); ++i) name += (i ? "," : "") + g.space().name(t.sub[i]);
  return LieAlg(name, GradedSpace(basis), table);
}

void require_reductive(const TripleSpec& t) {
  auto r = check_reductive(t);
  if (!r.ok) throw PbwError(ErrorCode::TamenessRequired, "requires a reductive pair: " + r.message, r.witness);
}

void require_tame(const TripleSpec& t) {
  require_reductive(t);
  auto r = check_tame(t);
  if (!r.ok) throw PbwError(ErrorCode::TamenessRequired, "requires a tame triple: " + r.message, r.witness);
}

std::vector<SymElem> kernel_elements(const Matrix& K, const std::vector<Word>& basis) {
  std::vector<SymElem> out;
  for (std::size_t f = 0; f < K.cols(); ++f) {
    SymElem e;
    for (std::size_t j = 0; j < basis.size(); ++j) e.add(basis[j], K(j, f));
    out.push_back(e);
  }
  return out;
}

std::string mono_name(const GradedSpace& V, const Word& w) { return w.empty() ? "1" : word_to_string(V, w); }

}  // namespace

TripleSpec make_triple(const LieAlg& g, const std::vector<std::string>& sub,
                       const std::vector<std::string>& complement) {
  TripleSpec t;
  t.ambient = g;
  std::set<int> seen;
  auto resolve = [&](const std::vector<std::string>& names, std::vector<int>& out) {
    for (const auto& s : names) {
      if (!g.space().contains(s))
        throw PbwError(ErrorCode::ConfigError, "unknown basis vector '" + s + "' in triple", {s});
      int i = g.space().index_of(s);
      if (!seen.insert(i).second) throw PbwError(ErrorCode::ConfigError, "basis vector '" + s + "' listed twice", {s});
      out.push_back(i);
    }
    std::sort(out.begin(), out.end());
  };
  resolve(sub, t.sub);
  resolve(complement, t.complement);
  if (static_cast<int>(seen.size()) != g.dim())
    throw PbwError(ErrorCode::ConfigError, "subalgebra and complement must partition the basis");
  return t;
}

Vec project_sub(const TripleSpec& t, const Vec& v) { return restrict_to(v, t.sub); }
Vec project_complement(const TripleSpec& t, const Vec& v) { return restrict_to(v, t.complement); }

PairCheck check_reductive(const TripleSpec& t) {
  const LieAlg& g = t.ambient;
  const GradedSpace& V = g.space();
  PairCheck r;
  for (int a : t.sub)
    for (int b : t.sub) {
      Vec out = project_complement(t, g.bracket(a, b));
      if (!out.is_zero()) {
        r.ok = false;
        r.witness = {V.name(a), V.name(b)};
        r.message = "[" + V.name(a) + "," + V.name(b) + "] = " + show(V, g.bracket(a, b)) + " leaves the subalgebra";
        return r;
      }
    }
  for (int h : t.sub)
    for (int n : t.complement) {
      Vec out = project_sub(t, g.bracket(h, n));
      if (!out.is_zero()) {
        r.ok = false;
        r.witness = {V.name(h), V.name(n)};
        r.message = "[" + V.name(h) + "," + V.name(n) + "] = " + show(V, g.bracket(h, n)) + " leaves the complement";
        return r;
      }
    }
  return r;
}

PairCheck check_tame(const TripleSpec& t) {
  const LieAlg& g = t.ambient;
  const GradedSpace& V = g.space();
  PairCheck r;
  for (int a : t.complement)
    for (int b : t.complement) {
      Vec beta = project_sub(t, g.bracket(a, b));
      if (beta.is_zero()) continue;
      for (int c : t.complement) {
        Vec out = g.bracket(beta, Vec(c, 1));
        if (!out.is_zero()) {
          r.ok = false;
          r.witness = {V.name(a), V.name(b), V.name(c)};
          r.message = "[" + show(V, beta) + "," + V.name(c) + "] = " + show(V, out);
          return r;
        }
      }
    }
  return r;
}

LieAlg induced_bracket(const TripleSpec& t) {
  require_tame(t);
  LieAlg n = build_induced(t);
  auto check = check_lie(n);
  if (!check.ok) throw std::logic_error("induced bracket of a tame triple is not Lie: " + check.message);
  return n;
}

NModule::NModule(const TripleSpec& t, int N) : t_(t), N_(N), local_(t.ambient.dim(), -1) {
  require_reductive(t);
  n_ = build_induced(t);
  for (std::size_t i = 0; i < t.complement.size(); ++i) local_[t.complement[i]] = static_cast<int>(i);
}

SymElem NModule::act(int x, const SymElem& u) const {
  if (local_[x] >= 0) return star_multiply(n_, N_, SymElem(Word{local_[x]}, 1), u);
  return derivation_extend(n_.space(), t_.ambient.odd(x),
                           [&](int j) {
                             Vec out;
                             for (const auto& [k, c] : t_.ambient.bracket(x, t_.complement[j])) out.add(local_[k], c);
                             return out;
                           },
                           u);
}

SymElem NModule::act(const Vec& x, const SymElem& u) const {
  SymElem out;
  for (const auto& [k, c] : x) out.add(act(k, u), c);
  return out;
}

SymElem NModule::act(const UEnvElem& w, const SymElem& u) const {
  SymElem out;
  for (const auto& [word, c] : w) {
    SymElem r = u;
    for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it) r = act(*it, r);
    out.add(r, c);
  }
  return out;
}

std::vector<ModuleAxiomReport> module_axiom_check(const TripleSpec& t, int N) {
  NModule M(t, N);
  const LieAlg& g = t.ambient;
  const GradedSpace& V = g.space();
  const GradedSpace& Vn = M.n().space();
  auto monos = sym_basis_upto(Vn, std::max(N - 2, 0));
  std::vector<ModuleAxiomReport> reports(3);
  reports[0].group = "nn";
  reports[1].group = "nh";
  reports[2].group = "hh";
  for (int x = 0; x < g.dim(); ++x)
    for (int y = 0; y < g.dim(); ++y) {
      const int in_n = (M.local(x) >= 0) + (M.local(y) >= 0);
      auto& rep = reports[in_n == 2 ? 0 : in_n == 1 ? 1 : 2];
      if (!rep.ok) continue;
      const int sign = koszul_swap_sign(V, x, y);
      for (const auto& m : monos) {
        SymElem u(m, 1);
        SymElem lhs = M.act(g.bracket(x, y), u);
        SymElem rhs = M.act(x, M.act(y, u)) - M.act(y, M.act(x, u)) * Rational(sign);
        if (lhs != rhs) {
          rep.ok = false;
          rep.witness = {V.name(x), V.name(y), mono_name(Vn, m)};
          rep.defect = lhs - rhs;
          break;
        }
      }
    }
  return reports;
}

std::vector<DimensionRow> dimension_identity(const TripleSpec& t, int N) {
  NModule M(t, N);
  std::vector<DimensionRow> rows;
  for (int p = 1; p <= N; ++p) {
    DimensionRow r;
    r.p = p;
    r.lhs = static_cast<long long>(sym_basis_upto(t.ambient.space(), p).size()) -
            static_cast<long long>(sym_basis_upto(M.n().space(), p).size());
    r.rhs = static_cast<long long>(t.sub.size()) * static_cast<long long>(sym_basis_upto(t.ambient.space(), p - 1).size());
    rows.push_back(r);
  }
  return rows;
}

SectionReport delta_section_check(const TripleSpec& t, int N) {
  require_tame(t);
  NModule M(t, N);
  const GradedSpace& Vn = M.n().space();
  PbwOracle oracle(t.ambient);
  SectionReport r;
  const SymElem one(Word{}, 1);
  for (const auto& m : sym_basis_upto(Vn, N)) {
    Word ambient_word;
    for (int i : m) ambient_word.push_back(t.complement[i]);
    UEnvElem delta = oracle.symmetrize(SymElem(ambient_word, 1));
    if (M.act(delta, one) != SymElem(m, 1)) {
      r.section = false;
      r.witness = {mono_name(Vn, m)};
      break;
    }
  }
  for (const auto& row : dimension_identity(t, N))
    if (row.lhs != row.rhs) {
      r.dimensions = false;
      if (r.witness.empty()) r.witness = {"p=" + std::to_string(row.p)};
      break;
    }
  return r;
}

std::vector<SymElem> sub_invariants(const TripleSpec& t, int k) {
  NModule M(t, k);
  auto basis = symmetric_basis(M.n().space(), k);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix A(basis.size() * std::max<std::size_t>(t.sub.size(), 1), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t s = 0; s < t.sub.size(); ++s)
      for (const auto& [m, c] : M.act(t.sub[s], SymElem(basis[j], 1))) A(s * basis.size() + index.at(m), j) = c;
  return kernel_elements(kernel(A), basis);
}

AntimorphismReport antimorphism_check(const TripleSpec& t, int N) {
  require_tame(t);
  LieAlg n = induced_bracket(t);
  const GradedSpace& Vn = n.space();
  std::vector<std::vector<SymElem>> inv(N + 1);
  for (int k = 0; k <= N; ++k) inv[k] = sub_invariants(t, k);
  AntimorphismReport r;
  for (int dp = 0; dp <= N; ++dp)
    for (int dq = 0; dp + dq <= N; ++dq)
      for (const auto& P : inv[dp])
        for (const auto& Q : inv[dq]) {
          ++r.pairs;
          SymElem PQ = star_multiply(n, N, P, Q);
          for (const auto& m : sym_basis_upto(Vn, N - dp - dq)) {
            SymElem u(m, 1);
            if (star_multiply(n, N, u, PQ) != star_multiply(n, N, star_multiply(n, N, u, P), Q)) {
              r.ok = false;
              r.witness = {"deg " + std::to_string(dp), "deg " + std::to_string(dq), mono_name(Vn, m)};
              return r;
            }
          }
        }
  return r;
}

namespace fixtures {

TripleSpec h3_center() { return make_triple(heisenberg(), {"z"}, {"x", "y"}); }
TripleSpec aff1_pair() { return make_triple(aff1(), {"h"}, {"x"}); }
TripleSpec sl2_cartan() { return make_triple(sl2(), {"h"}, {"e", "f"}); }
TripleSpec sl2_upper() { return make_triple(sl2(), {"e"}, {"h", "f"}); }
TripleSpec semidirect_pair() { return make_triple(semidirect_h3(), {"d"}, {"x", "y", "z"}); }

}  // namespace fixtures

}  // namespace pbw
