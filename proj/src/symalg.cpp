#include "pbw/symalg.hpp"

#include <stdexcept>

#include "pbw/series.hpp"

namespace pbw {

SymElem sym_monomial(const GradedSpace& V, const Word& w) {
  auto [s, m] = canonicalize(V, w);
  return s == 0 ? SymElem{} : SymElem(m, s);
}

std::vector<Word> sym_basis_upto(const GradedSpace& V, int N) {
  std::vector<Word> out;
  for (int k = 0; k <= N; ++k) {
    auto b = symmetric_basis(V, k);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

namespace {

void add_concat(const GradedSpace& V, SymElem& out, const Word& a, const Word& b, const Rational& c) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  auto [s, m] = canonicalize(V, w);
  if (s != 0) out.add(m, c * s);
}

// Sign of moving letter j of a word to the end.
int to_end_sign(const GradedSpace& V, const Word& w, std::size_t j) {
  int s = 1;
  for (std::size_t k = j + 1; k < w.size(); ++k) s *= koszul_swap_sign(V, w[j], w[k]);
  return s;
}

Word erase_at(const Word& w, std::size_t j) {
  Word r = w;
  r.erase(r.begin() + static_cast<long>(j));
  return r;
}

}  // namespace

SymElem m0(const GradedSpace& V, const SymElem& a, const SymElem& b) {
  SymElem out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) add_concat(V, out, u, v, c * d);
  return out;
}

SymElem m0(const GradedSpace& V, const SymVecElem& t) {
  SymElem out;
  for (const auto& [key, c] : t) add_concat(V, out, key.first, Word{key.second}, c);
  return out;
}

SymElem m0(const GradedSpace& V, const SymPairElem& t) {
  SymElem out;
  for (const auto& [key, c] : t) add_concat(V, out, key.first, key.second, c);
  return out;
}

SymElem right_derivative(const GradedSpace& V, const Word& mono, int i) {
  SymElem out;
  for (std::size_t j = 0; j < mono.size(); ++j)
    if (mono[j] == i) out.add(erase_at(mono, j), to_end_sign(V, mono, j));
  return out;
}

SymElem contract(const GradedSpace& V, const SymElem& a, const Word& dual_mono) {
  SymElem cur = a;
  for (int i : dual_mono) {
    SymElem next;
    for (const auto& [m, c] : cur) next.add(right_derivative(V, m, i), c);
    cur = std::move(next);
    if (cur.is_zero()) break;
  }
  return cur;
}

SymElem contract(const GradedSpace& V, const SymElem& a, const DualElem& xi) {
  SymElem out;
  for (const auto& [m, c] : xi) out.add(contract(V, a, m), c);
  return out;
}

SymVecElem omega(const LieAlg& g, const SymVecElem& t) {
  const GradedSpace& V = g.space();
  SymVecElem out;
  for (const auto& [key, c] : t) {
    const auto& [mono, v] = key;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      const Vec& br = g.bracket(mono[j], v);
      if (br.is_zero()) continue;
      Rational s = c * to_end_sign(V, mono, j);
      Word rest = erase_at(mono, j);
      for (const auto& [k, d] : br) out.add({rest, k}, s * d);
    }
  }
  return out;
}

SymVecElem omega_power(const LieAlg& g, int p, const SymVecElem& t) {
  SymVecElem cur = t;
  for (int i = 0; i < p && !cur.is_zero(); ++i) cur = omega(g, cur);
  return cur;
}

SymElem phi_todd(const LieAlg& g, const Word& mono, int v) {
  SymVecElem cur({mono, v}, 1);
  SymElem out;
  for (std::size_t i = 0; i <= mono.size() && !cur.is_zero(); ++i) {
    out.add(m0(g.space(), cur), todd_coefficient(i));
    cur = omega(g, cur);
  }
  return out;
}

SymVecElem contracted_bullet(const LieAlg& g, const Word& mono, int p, int v) {
  SymVecElem out;
  SymElem a(mono, 1);
  for (const auto& [key, c] : mu_star_power(g, p, v))
    for (const auto& [m, d] : contract(g.space(), a, key.first)) out.add({m, key.second}, c * d);
  return out;
}

SymElem derivation_extend(const GradedSpace& V, bool odd, const std::function<Vec(int)>& image, const SymElem& a) {
  SymElem out;
  for (const auto& [mono, c] : a) {
    int passed = 1;
    for (std::size_t j = 0; j < mono.size(); ++j) {
      for (const auto& [k, d] : image(mono[j])) {
        Word w = mono;
        w[j] = k;
        auto [s, m] = canonicalize(V, w);
        if (s != 0) out.add(m, c * d * s * passed);
      }
      if (odd && V.odd(mono[j])) passed = -passed;
    }
  }
  return out;
}

SymElem derivation_action(const LieAlg& g, int x, const SymElem& a) {
  return derivation_extend(g.space(), g.odd(x), [&](int j) { return g.bracket(x, j); }, a);
}

namespace {

// Sign of reordering `mono` so that the letters with block[j] = 0 come first,
// then block 1, and so on, keeping the relative order inside each block.
int block_sign(const GradedSpace& V, const Word& mono, const std::vector<int>& block) {
  int s = 1;
  for (std::size_t i = 0; i < mono.size(); ++i)
    for (std::size_t j = i + 1; j < mono.size(); ++j)
      if (block[i] > block[j]) s *= koszul_swap_sign(V, mono[i], mono[j]);
  return s;
}

}  // namespace

SymPairElem coproduct(const GradedSpace& V, const SymElem& a) {
  SymPairElem out;
  for (const auto& [mono, c] : a) {
    const std::size_t n = mono.size();
    std::vector<int> block(n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      Word left, right;
      for (std::size_t j = 0; j < n; ++j) {
        block[j] = (mask >> j) & 1ul ? 1 : 0;
        (block[j] ? right : left).push_back(mono[j]);
      }
      out.add({left, right}, c * block_sign(V, mono, block));
    }
  }
  return out;
}

LinComb<std::vector<Word>> reduced_coproduct_iterated(const GradedSpace& V, const Word& mono, int k) {
  LinComb<std::vector<Word>> out;
  const std::size_t n = mono.size();
  if (k < 1 || static_cast<std::size_t>(k) > n) return out;
  std::vector<int> block(n, 0);
  while (true) {
    std::vector<Word> parts(k);
    for (std::size_t j = 0; j < n; ++j) parts[block[j]].push_back(mono[j]);
    bool nonempty = true;
    for (const auto& p : parts) nonempty = nonempty && !p.empty();
    if (nonempty) out.add(parts, block_sign(V, mono, block));
    std::size_t j = 0;
    while (j < n && block[j] == k - 1) block[j++] = 0;
    if (j == n) break;
    ++block[j];
  }
  return out;
}

int total_degree(const SymElem& a) {
  int d = -1;
  for (const auto& [m, c] : a) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

SymElem degree_part(const SymElem& a, int k) {
  return a.filter([&](const Word& m) { return static_cast<int>(m.size()) == k; });
}

}  // namespace pbw
