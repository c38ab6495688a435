#include "pbw/gvs.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbw {

GradedSpace::GradedSpace(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = i + 1; j < basis_.size(); ++j)
      if (basis_[i].name == basis_[j].name)
        throw std::invalid_argument("GradedSpace: duplicate basis name '" + basis_[i].name + "'");
}

int GradedSpace::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  throw std::out_of_range("unknown basis vector '" + name + "'");
}

bool GradedSpace::contains(const std::string& name) const {
  return std::any_of(basis_.begin(), basis_.end(), [&](const BasisVector& b) { return b.name == name; });
}

std::vector<Word> tensor_basis(const GradedSpace& V, int n) {
  std::vector<Word> out;
  Word w(n, 0);
  if (n > 0 && V.dim() == 0) return out;
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == V.dim() - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

int koszul_swap_sign(const GradedSpace& V, int a, int b) { return V.odd(a) && V.odd(b) ? -1 : 1; }

std::pair<int, Word> koszul_act(const GradedSpace& V, const Permutation& g, const Word& w) {
  if (g.size() != static_cast<int>(w.size())) throw std::invalid_argument("koszul_act: arity mismatch");
  Word out(w.size());
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[g(static_cast<int>(i))] = w[i];
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (g(static_cast<int>(i)) > g(static_cast<int>(j))) sign *= koszul_swap_sign(V, w[i], w[j]);
  }
  return {sign, out};
}

TensorElem koszul_act(const GradedSpace& V, const GroupAlgElem& g, const TensorElem& t) {
  TensorElem out;
  for (const auto& [w, c] : t) {
    if (static_cast<int>(w.size()) != g.n) throw std::invalid_argument("koszul_act: arity mismatch");
    for (const auto& [p, x] : g.terms) {
      auto [s, u] = koszul_act(V, p, w);
      out.add(u, c * x * s);
    }
  }
  return out;
}

TensorMap permutation_map(const GradedSpace& V, const GroupAlgElem& g) {
  TensorMap m;
  m.domain = tensor_basis(V, g.n);
  for (const auto& w : m.domain) m.set(w, koszul_act(V, g, TensorElem(w, 1)));
  return m;
}

std::pair<int, Word> canonicalize(const GradedSpace& V, const Word& w) {
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (!V.odd(w[i]) || !V.odd(w[j])) continue;
      if (w[i] == w[j]) return {0, {}};
      if (w[i] > w[j]) sign = -sign;
    }
  Word s = w;
  std::sort(s.begin(), s.end());
  return {sign, s};
}

std::vector<Word> symmetric_basis(const GradedSpace& V, int n) {
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(w.size()) == n) {
      out.push_back(w);
      return;
    }
    for (int a = start; a < V.dim(); ++a) {
      if (V.odd(a) && !w.empty() && w.back() == a) continue;
      w.push_back(a);
      self(self, a);
      w.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

TensorElem apply_in_slot(const TensorMap& f, int k, int slot, const TensorElem& t) {
  TensorElem out;
  for (const auto& [w, c] : t) {
    if (slot < 0 || slot + k > static_cast<int>(w.size())) throw std::out_of_range("apply_in_slot: slot out of range");
    Word sub(w.begin() + slot, w.begin() + slot + k);
    for (const auto& [img, x] : f.apply(sub)) {
      Word nw(w.begin(), w.begin() + slot);
      nw.insert(nw.end(), img.begin(), img.end());
      nw.insert(nw.end(), w.begin() + slot + k, w.end());
      out.add(nw, c * x);
    }
  }
  return out;
}

TensorMap tensor_with_identity(const GradedSpace& V, const TensorMap& f, int k, int left, int right) {
  TensorMap m;
  m.domain = tensor_basis(V, left + k + right);
  for (const auto& w : m.domain) m.set(w, apply_in_slot(f, k, left, TensorElem(w, 1)));
  return m;
}

TensorMap compose_on(const GradedSpace& V, int n, const TensorMap& outer, const TensorMap& inner) {
  TensorMap m;
  m.domain = tensor_basis(V, n);
  for (const auto& w : m.domain) m.set(w, outer.apply(inner.apply(w)));
  return m;
}

SplitPower split_power(const GradedSpace& V, int n) {
  if (n < 0) throw std::invalid_argument("split_power: negative power");
  SplitPower s;
  s.n = n;
  s.tensor_basis = tensor_basis(V, n);
  s.sym_basis = symmetric_basis(V, n);
  const std::size_t D = s.tensor_basis.size();
  Matrix P = n == 0 ? Matrix::identity(1) : to_matrix(permutation_map(V, symmetrizer(n)), s.tensor_basis, s.tensor_basis);

  std::map<Word, std::size_t> tindex, sindex;
  for (std::size_t i = 0; i < D; ++i) tindex.emplace(s.tensor_basis[i], i);
  for (std::size_t i = 0; i < s.sym_basis.size(); ++i) sindex.emplace(s.sym_basis[i], i);

  s.proj_sym = Matrix(s.sym_basis.size(), D);
  for (std::size_t j = 0; j < D; ++j) {
    auto [sign, m] = canonicalize(V, s.tensor_basis[j]);
    if (sign != 0) s.proj_sym(sindex.at(m), j) = sign;
  }
  s.incl_sym = Matrix(D, s.sym_basis.size());
  for (std::size_t j = 0; j < s.sym_basis.size(); ++j) {
    std::size_t col = tindex.at(s.sym_basis[j]);
    for (std::size_t i = 0; i < D; ++i) s.incl_sym(i, j) = P(i, col);
  }

  std::vector<std::size_t> free;
  s.incl_lambda = kernel(P, &free);
  s.dim_lambda = static_cast<int>(free.size());
  Matrix Q = Matrix::identity(D) - P;
  s.proj_lambda = Matrix(free.size(), D);
  for (std::size_t f = 0; f < free.size(); ++f)
    for (std::size_t j = 0; j < D; ++j) s.proj_lambda(f, j) = Q(free[f], j);
  return s;
}

std::vector<std::pair<int, int>> lambda2_basis(const GradedSpace& V) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < V.dim(); ++a)
    for (int b = a; b < V.dim(); ++b)
      if (a < b || V.odd(a)) out.emplace_back(a, b);
  return out;
}

LinComb<BlockWord> antisymmetric_coordinates(const GradedSpace& V, int block, const TensorElem& t) {
  LinComb<BlockWord> out;
  for (const auto& [w, c] : t) {
    int a = w[block - 1], b = w[block];
    if (a < b || (a == b && V.odd(a))) out.add(BlockWord{block, w}, c);
  }
  return out;
}

PsiPhi psi_map(const GradedSpace& V, int n) {
  if (n < 2) throw std::invalid_argument("psi_map: n must be at least 2");
  PsiPhi r;
  auto pairs = lambda2_basis(V);
  for (int i = 1; i <= n - 1; ++i)
    for (const auto& pre : tensor_basis(V, i - 1))
      for (const auto& [a, b] : pairs)
        for (const auto& post : tensor_basis(V, n - i - 1)) {
          Word w = pre;
          w.push_back(a);
          w.push_back(b);
          w.insert(w.end(), post.begin(), post.end());
          BlockWord bw{i, w};
          r.block_basis.push_back(bw);
          TensorElem img(w, 1);
          if (a != b) {
            Word sw = w;
            std::swap(sw[i - 1], sw[i]);
            img.add(sw, -koszul_swap_sign(V, a, b));
          }
          r.psi.set(bw, img);
        }
  r.psi.domain = r.block_basis;

  auto a = ideal_decomposition(n);
  std::vector<GroupAlgElem> pieces;
  for (int i = 1; i <= n - 1; ++i)
    pieces.push_back((GroupAlgElem::one(n) - adjacent_transposition(n, i)) * a[i - 1]);
  r.phi.domain = tensor_basis(V, n);
  for (const auto& w : r.phi.domain) {
    LinComb<BlockWord> img;
    for (int i = 1; i <= n - 1; ++i)
      img += antisymmetric_coordinates(V, i, koszul_act(V, pieces[i - 1], TensorElem(w, 1)));
    r.phi.set(w, img);
  }
  return r;
}

TensorMap alpha_squared(const GradedSpace& V, const TensorMap& alpha) {
  return compose_on(V, 3, alpha, tensor_with_identity(V, alpha, 2, 0, 1));
}

namespace {

TensorMap precompose_perm(const GradedSpace& V, const TensorMap& f, const Permutation& g) {
  return compose_on(V, g.size(), f, permutation_map(V, GroupAlgElem::of(g)));
}

TensorMap combine(const GradedSpace& V, int n, const std::vector<std::pair<Rational, const TensorMap*>>& parts) {
  TensorMap m;
  m.domain = tensor_basis(V, n);
  for (const auto& w : m.domain) {
    TensorElem img;
    for (const auto& [c, f] : parts) img.add(f->apply(w), c);
    m.set(w, img);
  }
  return m;
}

void require_antisymmetric(const GradedSpace& V, const TensorMap& alpha) {
  auto pi2 = symmetrizer(2);
  for (const auto& w : tensor_basis(V, 2))
    if (!alpha.apply(koszul_act(V, pi2, TensorElem(w, 1))).is_zero())
      throw std::invalid_argument("bracket does not vanish on S^2 V at " + word_to_string(V, w));
}

}  // namespace

TensorMap jacobiator(const GradedSpace& V, const TensorMap& alpha) {
  TensorMap u = alpha_squared(V, alpha);
  Permutation t2 = Permutation::adjacent(3, 2), t21 = t2 * Permutation::adjacent(3, 1);
  TensorMap u2 = precompose_perm(V, u, t2), u21 = precompose_perm(V, u, t21);
  return combine(V, 3, {{1, &u}, {-1, &u2}, {1, &u21}});
}

JacobiWitness jacobi_witness(const GradedSpace& V, const TensorMap& alpha) {
  require_antisymmetric(V, alpha);
  JacobiWitness out;
  TensorMap J = jacobiator(V, alpha);
  for (const auto& w : J.domain)
    if (!J.apply(w).is_zero()) {
      out.violation = w;
      break;
    }

  TensorMap u = alpha_squared(V, alpha);
  TensorMap v = compose_on(V, 3, alpha, tensor_with_identity(V, alpha, 2, 1, 0));
  Permutation t2 = Permutation::adjacent(3, 2), t21 = t2 * Permutation::adjacent(3, 1);
  TensorMap u2 = precompose_perm(V, u, t2), u21 = precompose_perm(V, u, t21);
  TensorMap beta = combine(V, 3, {{1, &u}, {Rational(-1, 3), &u2}, {Rational(-1, 3), &u21}});

  PsiPhi pp = psi_map(V, 3);
  for (const auto& bw : pp.block_basis) {
    TensorElem x = pp.psi.apply(bw);
    const TensorMap& target = bw.block == 1 ? u : v;
    if (!(beta.apply(x) == target.apply(x))) return out;
  }
  out.beta = std::move(beta);
  return out;
}

std::string word_to_string(const GradedSpace& V, const Word& w, const char* sep) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += V.name(w[i]);
  }
  return s;
}

}  // namespace pbw
