#include "pbw/duflo.hpp"

#include <algorithm>
#include <stdexcept>

#include "pbw/matrix.hpp"
#include "pbw/series.hpp"

namespace pbw {

std::vector<Rational> log_todd_coefficients(std::size_t length) {
  // log f with f(0) = 1: (log f)' = f'/f, integrated termwise.
  auto f = series_table(SeriesKind::Todd, length + 1).coefficients;
  auto inv = series_reciprocal(f, length + 1);
  std::vector<Rational> df(length + 1);
  for (std::size_t i = 0; i + 1 <= length; ++i) df[i] = f[i + 1] * static_cast<unsigned long>(i + 1);
  std::vector<Rational> out(length);
  for (std::size_t n = 1; n < length; ++n) {
    Rational q = 0;  // coefficient of x^{n-1} in f'/f
    for (std::size_t i = 0; i <= n - 1; ++i) q += df[i] * inv[n - 1 - i];
    out[n] = q / static_cast<unsigned long>(n);
  }
  return out;
}

namespace {

PowerSumPoly ps_multiply(const PowerSumPoly& a, const PowerSumPoly& b, int max_weight) {
  PowerSumPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      int weight = 0;
      for (int i : w) weight += i;
      if (weight > max_weight) continue;
      std::sort(w.begin(), w.end());
      out.add(w, c * d);
    }
  return out;
}

int weight(const Word& w) {
  int s = 0;
  for (int i : w) s += i;
  return s;
}

}  // namespace

PowerSumPoly p_polynomial(int k) {
  if (k < 0) throw std::invalid_argument("p_polynomial: negative index");
  auto l = log_todd_coefficients(static_cast<std::size_t>(k) + 1);
  PowerSumPoly L;
  for (int j = 1; j <= k; ++j) L.add(Word{j}, l[j]);
  PowerSumPoly out(Word{}, 1), power(Word{}, 1);
  for (int m = 1; m <= k; ++m) {
    power = ps_multiply(power, L, k) * Rational(1, m);
    out += power;
  }
  return out.filter([&](const Word& w) { return weight(w) == k; });
}

bool bernoulli_recursion_check(int k) {
  if (k < 1) throw std::invalid_argument("bernoulli_recursion_check: k must be at least 1");
  PowerSumPoly sum = p_polynomial(k) * Rational(k);
  for (int i = 1; i <= k; ++i)
    sum += ps_multiply(PowerSumPoly(Word{i}, inverse_todd_coefficient(i)), p_polynomial(k - i), k);
  return sum.is_zero();
}

std::string to_string(const PowerSumPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : p) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      s += "*y" + std::to_string(w[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return s;
}

DufloElement duflo_element(const LieAlg& g, int N) {
  if (N < 0) throw std::invalid_argument("duflo_element: negative truncation");
  const GradedSpace& V = g.space();
  std::vector<DualElem> nus(N + 1);
  for (int i = 1; i <= N; ++i) nus[i] = nu(g, i);
  DufloElement d;
  d.trunc = N;
  d.components.assign(N + 1, DualElem{});
  d.components[0] = DualElem(Word{}, 1);
  for (int p = 1; p <= N; ++p)
    for (const auto& [mono, c] : p_polynomial(p)) {
      DualElem term(Word{}, c);
      for (int i : mono) term = m0(V, term, nus[i]);
      d.components[p] += term;
    }
  return d;
}

std::vector<DualElem> duflo_sqrt(const LieAlg& g, int N) {
  // s^2 = d degree by degree: 2 s_p = d_p - sum_{0<i<p} s_i s_{p-i}.
  const GradedSpace& V = g.space();
  auto d = duflo_element(g, N).components;
  std::vector<DualElem> s(N + 1);
  s[0] = DualElem(Word{}, 1);
  for (int p = 1; p <= N; ++p) {
    DualElem r = d[p];
    for (int i = 1; i < p; ++i) r -= m0(V, s[i], s[p - i]);
    s[p] = r * Rational(1, 2);
  }
  return s;
}

SymElem TorsionMorphism::total(const Word& x) const {
  SymElem out;
  for (const auto& c : components) out += c.apply(x);
  return out;
}

namespace {

void check_top(const LieAlg& g, int ell, const LinearMap<Word, Word>& top) {
  for (const auto& x : top.domain)
    for (const auto& [m, c] : top.apply(x))
      if (static_cast<int>(m.size()) != ell) throw std::invalid_argument("torsion: top component must land in S^ell V");
  (void)g;
}

}  // namespace

TorsionMorphism torsion_solve(const LieAlg& g, int ell, const LinearMap<Word, Word>& top, int N) {
  if (ell < 0) throw std::invalid_argument("torsion_solve: negative level");
  if (ell > N - 1)
    throw PbwError(ErrorCode::TruncationTooSmall,
                   "level " + std::to_string(ell) + " needs truncation at least " + std::to_string(ell + 1));
  check_top(g, ell, top);
  const GradedSpace& V = g.space();
  std::vector<DualElem> nus(ell + 1);
  for (int i = 1; i <= ell; ++i) nus[i] = nu(g, i);
  TorsionMorphism a;
  a.ell = ell;
  a.source = top.domain;
  a.components.assign(ell + 1, LinearMap<Word, Word>{});
  for (auto& c : a.components) c.domain = top.domain;
  a.components[ell] = top;
  for (int k = 1; k <= ell; ++k)
    for (const auto& x : a.source) {
      SymElem acc;
      for (int i = 1; i <= k; ++i)
        acc.add(contract(V, a.components[ell - k + i].apply(x), nus[i]), inverse_todd_coefficient(i));
      a.components[ell - k].set(x, acc * Rational(-1, k));
    }
  return a;
}

TorsionMorphism torsion_trace_solve(const LieAlg& g, int ell, const LinearMap<Word, Word>& top) {
  if (ell < 0) throw std::invalid_argument("torsion_trace_solve: negative level");
  check_top(g, ell, top);
  const GradedSpace& V = g.space();
  int sdim = 0;
  for (int i = 0; i < g.dim(); ++i) sdim += V.odd(i) ? -1 : 1;
  std::vector<DualElem> nus(ell + 1);
  for (int i = 1; i <= ell; ++i) nus[i] = nu(g, i);
  TorsionMorphism a;
  a.ell = ell;
  a.source = top.domain;
  a.components.assign(ell + 1, LinearMap<Word, Word>{});
  for (auto& c : a.components) c.domain = top.domain;
  a.components[ell] = top;
  for (int k = 1; k <= ell; ++k) {
    const int lead = ell - k + sdim;
    for (const auto& x : a.source) {
      SymElem acc;
      for (int i = 1; i <= k; ++i)
        acc.add(contract(V, a.components[ell - k + i].apply(x), nus[i]), todd_coefficient(i));
      if (lead == 0) {
        if (!acc.is_zero()) throw std::domain_error("torsion_trace_solve: vanishing leading coefficient");
        continue;
      }
      a.components[ell - k].set(x, acc * Rational(-1, lead));
    }
  }
  return a;
}

TorsionMorphism torsion_closed_form(const LieAlg& g, int ell, const LinearMap<Word, Word>& top) {
  check_top(g, ell, top);
  const GradedSpace& V = g.space();
  auto d = duflo_element(g, ell).components;
  TorsionMorphism a;
  a.ell = ell;
  a.source = top.domain;
  a.components.assign(ell + 1, LinearMap<Word, Word>{});
  for (auto& c : a.components) c.domain = top.domain;
  for (const auto& x : a.source)
    for (int p = 0; p <= ell; ++p) a.components[ell - p].set(x, contract(V, top.apply(x), d[p]));
  return a;
}

std::optional<TorsionDefect> torsion_defect(const LieAlg& g, const TorsionMorphism& a) {
  const int N = a.ell + 1;
  for (const auto& x : a.source) {
    SymElem ax = a.total(x);
    for (int v = 0; v < g.dim(); ++v) {
      SymElem prod = star_multiply(g, N, ax, SymElem(Word{v}, 1));
      for (int k = 0; k <= a.ell; ++k) {
        SymElem piece = degree_part(prod, k);
        if (!piece.is_zero()) return TorsionDefect{x, v, k, piece};
      }
    }
  }
  return std::nullopt;
}

std::vector<SymElem> torsion_space(const LieAlg& g, int ell) {
  const GradedSpace& V = g.space();
  auto unknowns = sym_basis_upto(V, ell);
  auto rows = sym_basis_upto(V, ell);
  std::map<Word, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  const std::size_t R = rows.size() * static_cast<std::size_t>(g.dim());
  Matrix A(R, unknowns.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    for (int v = 0; v < g.dim(); ++v)
      for (const auto& [m, c] : star_monomials(g, unknowns[j], Word{v})) {
        auto it = row_index.find(m);
        if (it != row_index.end()) A(static_cast<std::size_t>(v) * rows.size() + it->second, j) = c;
      }
  Matrix K = kernel(A);
  std::vector<SymElem> out;
  for (std::size_t f = 0; f < K.cols(); ++f) {
    SymElem e;
    for (std::size_t j = 0; j < unknowns.size(); ++j) e.add(unknowns[j], K(j, f));
    out.push_back(e);
  }
  return out;
}

std::vector<SymElem> invariant_polynomials(const LieAlg& g, int k) {
  const GradedSpace& V = g.space();
  auto basis = symmetric_basis(V, k);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix A(basis.size() * static_cast<std::size_t>(g.dim()), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int z = 0; z < g.dim(); ++z)
      for (const auto& [m, c] : derivation_action(g, z, SymElem(basis[j], 1)))
        A(static_cast<std::size_t>(z) * basis.size() + index.at(m), j) = c;
  Matrix K = kernel(A);
  std::vector<SymElem> out;
  for (std::size_t f = 0; f < K.cols(); ++f) {
    SymElem e;
    for (std::size_t j = 0; j < basis.size(); ++j) e.add(basis[j], K(j, f));
    out.push_back(e);
  }
  return out;
}

LinearMap<Word, Word> top_identity(const LieAlg& g) {
  LinearMap<Word, Word> m;
  for (int i = 0; i < g.dim(); ++i) {
    m.domain.push_back(Word{i});
    m.set(Word{i}, SymElem(Word{i}, 1));
  }
  return m;
}

LinearMap<Word, Word> top_projection(const LieAlg& g, int ell) {
  LinearMap<Word, Word> m;
  m.domain = tensor_basis(g.space(), ell);
  for (const auto& w : m.domain) m.set(w, sym_monomial(g.space(), w));
  return m;
}

LinearMap<Word, Word> top_invariants(const LieAlg& g, int ell) {
  LinearMap<Word, Word> m;
  auto inv = invariant_polynomials(g, ell);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    Word key{static_cast<int>(i)};
    m.domain.push_back(key);
    m.set(key, inv[i]);
  }
  return m;
}

CasimirCheck duflo_casimir_check(const LieAlg& g) {
  CasimirCheck r;
  auto inv = invariant_polynomials(g, 2);
  if (inv.size() != 1) {
    r.detail = "expected exactly one quadratic invariant, found " + std::to_string(inv.size());
    return r;
  }
  r.casimir = inv[0];
  auto s = duflo_sqrt(g, 2);
  for (int p = 0; p <= 2; ++p) r.twisted += contract(g.space(), r.casimir, s[p]);
  PbwOracle oracle(g);
  UEnvElem u = oracle.symmetrize(r.twisted);
  r.central = true;
  for (int x = 0; x < g.dim() && r.central; ++x) {
    UEnvElem ex(Word{x}, 1);
    UEnvElem comm = oracle.multiply(ex, u) - oracle.multiply(u, ex);
    if (!comm.is_zero()) {
      r.central = false;
      r.detail = "fails to commute with " + g.space().name(x);
    }
  }
  return r;
}

}  // namespace pbw
