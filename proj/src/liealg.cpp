#include "pbw/liealg.hpp"

#include <stdexcept>

#include "pbw/symalg.hpp"

namespace pbw {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ConfigError: return "CONFIG_ERROR";
    case ErrorCode::AntisymmetryViolation: return "ANTISYMMETRY_VIOLATION";
    case ErrorCode::JacobiViolation: return "JACOBI_VIOLATION";
    case ErrorCode::TruncationTooSmall: return "TRUNCATION_TOO_SMALL";
    case ErrorCode::TruncationOverflow: return "TRUNCATION_OVERFLOW";
    case ErrorCode::TamenessRequired: return "TAMENESS_REQUIRED";
  }
  return "UNKNOWN";
}

LieAlg::LieAlg(std::string name, GradedSpace V, std::vector<std::vector<Vec>> table)
    : name_(std::move(name)), V_(std::move(V)), table_(std::move(table)) {
  const auto d = static_cast<std::size_t>(V_.dim());
  if (table_.empty()) table_.assign(d, std::vector<Vec>(d));
  if (table_.size() != d) throw std::invalid_argument("LieAlg: bracket table has wrong size");
  for (const auto& row : table_) {
    if (row.size() != d) throw std::invalid_argument("LieAlg: bracket table has wrong size");
    for (const auto& v : row)
      for (const auto& [k, c] : v)
        if (k < 0 || k >= V_.dim()) throw std::invalid_argument("LieAlg: bracket result out of range");
  }
}

Vec LieAlg::bracket(const Vec& x, const Vec& y) const {
  Vec out;
  for (const auto& [a, c] : x)
    for (const auto& [b, d] : y) out.add(table_[a][b], c * d);
  return out;
}

TensorMap LieAlg::mu() const {
  TensorMap m;
  m.domain = tensor_basis(V_, 2);
  for (const auto& w : m.domain) {
    TensorElem img;
    for (const auto& [k, c] : table_[w[0]][w[1]]) img.add(Word{k}, c);
    m.set(w, img);
  }
  return m;
}

TensorMap LieAlg::alpha() const {
  TensorMap m = mu();
  for (auto& [k, v] : m.columns) v *= Rational(1, 2);
  return m;
}

bool LieAlg::is_abelian() const {
  for (const auto& row : table_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

LieAlg make_algebra(std::string name, std::vector<BasisVector> basis, const std::vector<BracketEntry>& entries) {
  GradedSpace V;
  try {
    V = GradedSpace(std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw PbwError(ErrorCode::ConfigError, e.what());
  }
  auto index = [&](const std::string& n) {
    if (!V.contains(n)) throw PbwError(ErrorCode::ConfigError, "unknown basis vector '" + n + "'", {n});
    return V.index_of(n);
  };
  const auto d = static_cast<std::size_t>(V.dim());
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d));
  std::vector<std::vector<bool>> listed(d, std::vector<bool>(d, false));
  for (const auto& e : entries) {
    int a = index(e.left), b = index(e.right);
    if (listed[a][b]) throw PbwError(ErrorCode::ConfigError, "bracket [" + e.left + "," + e.right + "] listed twice");
    listed[a][b] = true;
    for (const auto& [n, c] : e.result) table[a][b].add(index(n), c);
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (!listed[a][b] || a == b) continue;
      Vec expected = table[a][b] * Rational(-koszul_swap_sign(V, static_cast<int>(a), static_cast<int>(b)));
      if (!listed[b][a]) {
        table[b][a] = expected;
        listed[b][a] = true;
      } else if (!(table[b][a] == expected)) {
        throw PbwError(ErrorCode::ConfigError,
                       "brackets [" + V.name(a) + "," + V.name(b) + "] and [" + V.name(b) + "," + V.name(a) +
                           "] are inconsistent with graded antisymmetry",
                       {V.name(a), V.name(b)});
      }
    }
  return LieAlg(std::move(name), V, std::move(table));
}

LieCheck check_lie(const LieAlg& g) {
  const GradedSpace& V = g.space();
  LieCheck r;
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      for (const auto& [k, c] : g.bracket(a, b))
        if (V.degree(k) != V.degree(a) + V.degree(b)) {
          r.ok = false;
          r.code = ErrorCode::ConfigError;
          r.witness = {V.name(a), V.name(b)};
          r.message = "bracket [" + V.name(a) + "," + V.name(b) + "] is not of degree 0";
          return r;
        }
  for (int a = 0; a < g.dim(); ++a)
    for (int b = a; b < g.dim(); ++b) {
      Vec sum = g.bracket(a, b);
      sum.add(g.bracket(b, a), koszul_swap_sign(V, a, b));
      if (!sum.is_zero()) {
        r.ok = false;
        r.code = ErrorCode::AntisymmetryViolation;
        r.witness = {V.name(a), V.name(b)};
        r.message = "bracket is not graded antisymmetric on (" + V.name(a) + "," + V.name(b) + ")";
        return r;
      }
    }
  JacobiWitness jw = jacobi_witness(V, g.alpha());
  if (jw.beta.has_value() == jw.violation.has_value())
    throw std::logic_error("Jacobi criterion and classical Jacobiator disagree for " + g.name());
  if (jw.violation) {
    r.ok = false;
    r.code = ErrorCode::JacobiViolation;
    for (int i : *jw.violation) r.witness.push_back(V.name(i));
    r.message = "Jacobi identity fails on (" + word_to_string(V, *jw.violation, ",") + ")";
  }
  return r;
}

LieAlg validate(const LieAlg& g) {
  LieCheck r = check_lie(g);
  if (!r.ok) throw PbwError(*r.code, r.message, r.witness);
  return g;
}

DualTensor mu_star(const LieAlg& g, int v) { return mu_star_power(g, 1, v); }

DualTensor mu_star_power(const LieAlg& g, int p, int v) {
  const GradedSpace& V = g.space();
  DualTensor cur(std::make_pair(Word{}, v), 1);
  for (int step = 0; step < p; ++step) {
    DualTensor next;
    for (const auto& [key, c] : cur) {
      const auto& [xi, w] = key;
      for (int i = 0; i < g.dim(); ++i) {
        const Vec& br = g.bracket(i, w);
        if (br.is_zero()) continue;
        Word nx = xi;
        nx.push_back(i);
        auto [s, m] = canonicalize(V, nx);
        if (s == 0) continue;
        for (const auto& [k, d] : br) next.add({m, k}, c * d * s);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Vec recontract(const LieAlg&, int x, const DualTensor& t) {
  Vec out;
  for (const auto& [key, c] : t)
    if (key.first == Word{x}) out.add(key.second, c);
  return out;
}

DualElem nu(const LieAlg& g, int k) {
  DualElem out;
  for (int i = 0; i < g.dim(); ++i) {
    int s = g.odd(i) ? -1 : 1;
    for (const auto& [key, c] : mu_star_power(g, k, i))
      if (key.second == i) out.add(key.first, c * s);
  }
  return out;
}

DualTensor bullet_epsilon(const LieAlg& g, int p) {
  const GradedSpace& V = g.space();
  DualTensor out;
  for (int i = 0; i < g.dim(); ++i)
    for (const auto& [key, c] : mu_star_power(g, p, i)) {
      Word w{i};
      w.insert(w.end(), key.first.begin(), key.first.end());
      auto [s, m] = canonicalize(V, w);
      if (s != 0) out.add({m, key.second}, c * s);
    }
  return out;
}

bool bullet_epsilon_check(const LieAlg& g, int p) { return bullet_epsilon(g, p).is_zero(); }

bool trace_identity_check(const LieAlg& g, int n, int p) {
  if (p < 1 || n < p) throw std::invalid_argument("trace_identity_check: need n >= p >= 1");
  const GradedSpace& V = g.space();
  DualElem nup = nu(g, p);
  for (const auto& a : symmetric_basis(V, n)) {
    SymElem lhs;
    for (int i = 0; i < g.dim(); ++i) {
      SymElem q = m0(V, omega_power(g, p, SymVecElem({a, i}, 1)));
      lhs.add(contract(V, q, Word{i}), g.odd(i) ? -1 : 1);
    }
    SymElem rhs = contract(V, SymElem(a, 1), nup);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool nu_invariance_check(const LieAlg& g, int k) {
  const GradedSpace& V = g.space();
  DualElem nuk = nu(g, k);
  for (int z = 0; z < g.dim(); ++z)
    for (const auto& m : symmetric_basis(V, k))
      if (!contract(V, derivation_action(g, z, SymElem(m, 1)), nuk).is_zero()) return false;
  return true;
}

std::string vec_to_string(const LieAlg& g, const Vec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + g.space().name(k);
  }
  return s;
}

}  // namespace pbw
