#include "pbw/ualg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pbw {

namespace {

Vec eval_tree(const LieAlg& g, const Word& w, const std::vector<int>& values) {
  if (w.size() == 1) return Vec(values[w[0]], 1);
  auto [u, v] = standard_factorization(w);
  return g.bracket(eval_tree(g, u, values), eval_tree(g, v, values));
}

}  // namespace

Vec eval_lie(const LieAlg& g, const FreeLieElem& x, const std::vector<int>& values) {
  const GradedSpace& V = g.space();
  Vec out;
  for (const auto& [w, c] : x.terms) {
    int s = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j)
        if (w[i] > w[j]) s *= koszul_swap_sign(V, values[w[i]], values[w[j]]);
    out.add(eval_tree(g, w, values), c * s);
  }
  return out;
}

SymElem star_monomials(const LieAlg& g, const Word& a, const Word& b) {
  const GradedSpace& V = g.space();
  Word letters = a;
  letters.insert(letters.end(), b.begin(), b.end());
  const std::size_t n = letters.size(), p = a.size();
  SymElem out;
  if (n == 0) return SymElem(Word{}, 1);
  // Restricted growth strings enumerate set partitions; block ids are ordered
  // by their smallest element.
  std::vector<int> rgs(n, 0), maxprefix(n, 0);
  while (true) {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Word> xa(nblocks), xb(nblocks);
    for (std::size_t j = 0; j < n; ++j) (j < p ? xa : xb)[rgs[j]].push_back(letters[j]);
    bool allowed = true;
    for (int k = 0; k < nblocks && allowed; ++k) {
      std::size_t size = xa[k].size() + xb[k].size();
      if (size >= 2 && (xa[k].empty() || xb[k].empty())) allowed = false;
    }
    if (allowed) {
      int s = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (rgs[i] > rgs[j]) s *= koszul_swap_sign(V, letters[i], letters[j]);
      SymElem prod(Word{}, s);
      for (int k = 0; k < nblocks && !prod.is_zero(); ++k) {
        Vec val;
        if (xa[k].size() + xb[k].size() == 1) {
          val = Vec(xa[k].empty() ? xb[k][0] : xa[k][0], 1);
        } else {
          std::vector<int> values = xa[k];
          values.insert(values.end(), xb[k].begin(), xb[k].end());
          val = eval_lie(g, mbrace(static_cast<int>(xa[k].size()), static_cast<int>(xb[k].size())), values);
        }
        SymElem factor;
        for (const auto& [i, c] : val) factor.add(Word{i}, c);
        prod = m0(V, prod, factor);
      }
      out += prod;
    }
    // next restricted growth string
    std::size_t j = n - 1;
    while (j > 0 && rgs[j] == maxprefix[j] + 1) --j;
    if (j == 0) break;
    ++rgs[j];
    for (std::size_t k = j + 1; k < n; ++k) {
      rgs[k] = 0;
      maxprefix[k] = std::max(maxprefix[k - 1], rgs[k - 1]);
    }
  }
  return out;
}

namespace {

void check_truncation(int N, const SymElem& a, const SymElem& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da >= 0 && db >= 0 && da + db > N)
    throw PbwError(ErrorCode::TruncationOverflow, "product of degrees " + std::to_string(da) + " and " +
                                                      std::to_string(db) + " exceeds truncation " + std::to_string(N));
}

}  // namespace

SymElem star_multiply(const LieAlg& g, int N, const SymElem& a, const SymElem& b) {
  check_truncation(N, a, b);
  SymElem out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) out.add(star_monomials(g, u, v), c * d);
  return out;
}

PbwOracle::PbwOracle(LieAlg g) : g_(std::move(g)) {}

UEnvElem PbwOracle::normal_order(const Word& w) {
  {
    std::lock_guard lock(mutex_);
    auto it = normal_cache_.find(w);
    if (it != normal_cache_.end()) return it->second;
  }
  const GradedSpace& V = g_.space();
  UEnvElem out;
  std::size_t i = 0;
  while (i + 1 < w.size() && (w[i] < w[i + 1] || (w[i] == w[i + 1] && !V.odd(w[i])))) ++i;
  if (i + 1 >= w.size()) {
    out = UEnvElem(w, 1);
  } else {
    int b = w[i], a = w[i + 1];
    auto replaced = [&](const Vec& v) {
      UEnvElem r;
      for (const auto& [k, c] : v) {
        Word nw(w.begin(), w.begin() + static_cast<long>(i));
        nw.push_back(k);
        nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
        r.add(normal_order(nw), c);
      }
      return r;
    };
    if (a == b) {
      out = replaced(g_.bracket(a, a) * Rational(1, 2));
    } else {
      Word sw = w;
      std::swap(sw[i], sw[i + 1]);
      out = normal_order(sw) * Rational(koszul_swap_sign(V, a, b));
      out += replaced(g_.bracket(b, a));
    }
  }
  std::lock_guard lock(mutex_);
  normal_cache_.emplace(w, out);
  return out;
}

UEnvElem PbwOracle::normal_order(const UEnvElem& x) {
  UEnvElem out;
  for (const auto& [w, c] : x) out.add(normal_order(w), c);
  return out;
}

UEnvElem PbwOracle::multiply(const UEnvElem& x, const UEnvElem& y) {
  UEnvElem out;
  for (const auto& [u, c] : x)
    for (const auto& [v, d] : y) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(normal_order(w), c * d);
    }
  return out;
}

UEnvElem PbwOracle::symmetrize_monomial(const Word& m) {
  {
    std::lock_guard lock(mutex_);
    auto it = sym_cache_.find(m);
    if (it != sym_cache_.end()) return it->second;
  }
  const int k = static_cast<int>(m.size());
  UEnvElem out;
  if (k == 0) {
    out = UEnvElem(Word{}, 1);
  } else {
    TensorElem t = koszul_act(g_.space(), symmetrizer(k), TensorElem(m, 1));
    out = normal_order(t);
  }
  std::lock_guard lock(mutex_);
  sym_cache_.emplace(m, out);
  return out;
}

UEnvElem PbwOracle::symmetrize(const SymElem& a) {
  UEnvElem out;
  for (const auto& [m, c] : a) out.add(symmetrize_monomial(m), c);
  return out;
}

SymElem PbwOracle::desymmetrize(const UEnvElem& u) {
  SymElem out;
  UEnvElem rest = u;
  while (!rest.is_zero()) {
    auto top = rest.begin();
    for (auto it = rest.begin(); it != rest.end(); ++it)
      if (it->first.size() > top->first.size()) top = it;
    Word m = top->first;
    Rational c = top->second;
    out.add(m, c);
    rest.add(symmetrize_monomial(m), -c);
  }
  return out;
}

SymElem PbwOracle::star(const SymElem& a, const SymElem& b) {
  return desymmetrize(multiply(symmetrize(a), symmetrize(b)));
}

SymElem pbw_oracle_multiply(const LieAlg& g, int N, const SymElem& a, const SymElem& b) {
  check_truncation(N, a, b);
  PbwOracle oracle(g);
  return oracle.star(a, b);
}

LinearMap<Word, Word> delta_map(const LieAlg& g, int p) {
  LinearMap<Word, Word> m;
  m.domain = tensor_basis(g.space(), p);
  for (const auto& w : m.domain) {
    SymElem cur(Word{}, 1);
    for (int x : w) cur = star_multiply(g, p, cur, SymElem(Word{x}, 1));
    m.set(w, cur);
  }
  return m;
}

LinearMap<Word, Word> structure_coefficients(const LieAlg& g, int p, int k) {
  if (k < 0 || k > p) throw std::invalid_argument("structure_coefficients: need 0 <= k <= p");
  auto d = delta_map(g, p);
  LinearMap<Word, Word> m;
  m.domain = d.domain;
  for (const auto& w : m.domain) m.set(w, degree_part(d.apply(w), k));
  return m;
}

bool structure_recursion_check(const LieAlg& g, int p, int k) {
  if (p < 2) throw std::invalid_argument("structure_recursion_check: need p >= 2");
  const GradedSpace& V = g.space();
  auto cp = structure_coefficients(g, p, k);
  LinearMap<Word, Word> cq;
  if (k <= p - 1) cq = structure_coefficients(g, p - 1, k);
  TensorMap alpha = g.alpha();
  PsiPhi pp = psi_map(V, p);
  for (const auto& bw : pp.block_basis) {
    TensorElem x = pp.psi.apply(bw);
    SymElem lhs = cp.apply(x);
    SymElem rhs = cq.apply(apply_in_slot(alpha, 2, bw.block - 1, x));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

LinearMap<SymVecKey, SymVecKey> omega_map(const LieAlg& g, int n) {
  LinearMap<SymVecKey, SymVecKey> m;
  for (const auto& a : symmetric_basis(g.space(), n))
    for (int v = 0; v < g.dim(); ++v) {
      m.domain.push_back({a, v});
      m.set({a, v}, omega(g, SymVecElem({a, v}, 1)));
    }
  return m;
}

LinearMap<SymVecKey, Word> phi_todd_map(const LieAlg& g, int n) {
  LinearMap<SymVecKey, Word> m;
  for (const auto& a : symmetric_basis(g.space(), n))
    for (int v = 0; v < g.dim(); ++v) {
      m.domain.push_back({a, v});
      m.set({a, v}, phi_todd(g, a, v));
    }
  return m;
}

LinearMap<SymPairKey, Word> contraction_map(const LieAlg& g, int n, int p) {
  if (p < 0 || n < p) throw std::invalid_argument("contraction_map: need n >= p >= 0");
  LinearMap<SymPairKey, Word> m;
  for (const auto& a : symmetric_basis(g.space(), n))
    for (const auto& xi : symmetric_basis(g.space(), p)) {
      m.domain.push_back({a, xi});
      m.set({a, xi}, contract(g.space(), SymElem(a, 1), xi));
    }
  return m;
}

}  // namespace pbw
