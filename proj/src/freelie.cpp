#include "pbw/freelie.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "pbw/series.hpp"

namespace pbw {

AssocPoly assoc_multiply(const AssocPoly& a, const AssocPoly& b, int max_degree) {
  AssocPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) {
      if (max_degree >= 0 && static_cast<int>(u.size() + v.size()) > max_degree) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, c * d);
    }
  return out;
}

AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b) {
  return assoc_multiply(a, b) - assoc_multiply(b, a);
}

AssocPoly truncate(const AssocPoly& a, int max_degree) {
  return a.filter([&](const Word& w) { return static_cast<int>(w.size()) <= max_degree; });
}

AssocPoly homogeneous_part(const AssocPoly& a, int degree) {
  return a.filter([&](const Word& w) { return static_cast<int>(w.size()) == degree; });
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (!(w < rot)) return false;
  }
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: word too short");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw std::logic_error("standard_factorization: unreachable");
}

std::vector<Word> lyndon_basis(int k, int n) {
  // Duval's generation of all Lyndon words of length <= n, in lexicographic order.
  std::vector<Word> out;
  if (k < 1 || n < 1) return out;
  Word w{-1};
  while (!w.empty()) {
    ++w.back();
    std::size_t m = w.size();
    if (static_cast<int>(m) == n) out.push_back(w);
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  return out;
}

FreeLieElem& FreeLieElem::operator+=(const FreeLieElem& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("FreeLieElem: alphabet mismatch");
  terms += o.terms;
  return *this;
}

FreeLieElem& FreeLieElem::operator-=(const FreeLieElem& o) {
  if (alphabet != o.alphabet) throw std::invalid_argument("FreeLieElem: alphabet mismatch");
  terms -= o.terms;
  return *this;
}

AssocPoly lyndon_expand(const Word& w) {
  if (w.size() == 1) return AssocPoly(w, 1);
  auto [u, v] = standard_factorization(w);
  return assoc_commutator(lyndon_expand(u), lyndon_expand(v));
}

AssocPoly to_assoc(const FreeLieElem& x) {
  AssocPoly out;
  for (const auto& [w, c] : x.terms) out.add(lyndon_expand(w), c);
  return out;
}

FreeLieElem to_lie(int alphabet, const AssocPoly& p) {
  FreeLieElem out{alphabet, {}};
  AssocPoly rest = p;
  std::map<Word, AssocPoly> cache;
  while (!rest.is_zero()) {
    auto [w, c] = *rest.begin();
    if (!is_lyndon(w)) throw std::invalid_argument("to_lie: polynomial is not a Lie element");
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, lyndon_expand(w)).first;
    Rational coeff = c;
    out.terms.add(w, coeff);
    rest.add(it->second, -coeff);
  }
  return out;
}

FreeLieElem substitute(const FreeLieElem& x, const std::vector<AssocPoly>& images, int new_alphabet,
                       int max_degree) {
  AssocPoly out;
  for (const auto& [w, c] : to_assoc(x)) {
    AssocPoly term(Word{}, c);
    for (int a : w) term = assoc_multiply(term, images.at(a), max_degree);
    out += term;
  }
  return to_lie(new_alphabet, truncate(out, max_degree));
}

FreeLieElem lie_bracket(const FreeLieElem& a, const FreeLieElem& b) {
  if (a.alphabet != b.alphabet) throw std::invalid_argument("lie_bracket: alphabet mismatch");
  return to_lie(a.alphabet, assoc_commutator(to_assoc(a), to_assoc(b)));
}

FreeLieElem truncate(const FreeLieElem& a, int max_degree) {
  return {a.alphabet, a.terms.filter([&](const Word& w) { return static_cast<int>(w.size()) <= max_degree; })};
}

namespace {

AssocPoly assoc_exp(const AssocPoly& x, int N) {
  AssocPoly out(Word{}, 1), power(Word{}, 1);
  for (int k = 1; k <= N; ++k) {
    power = assoc_multiply(power, x, N);
    out.add(power, Rational(Integer(1), factorial(k)));
  }
  return out;
}

// log(1 + z) for z without constant term.
AssocPoly assoc_log1p(const AssocPoly& z, int N) {
  AssocPoly out, power(Word{}, 1);
  for (int k = 1; k <= N; ++k) {
    power = assoc_multiply(power, z, N);
    out.add(power, Rational(k % 2 ? 1 : -1, k));
  }
  return out;
}

AssocPoly dynkin(const Word& w) {
  // [w_1,[w_2,...,w_n]] without the 1/n.
  AssocPoly acc(Word{w.back()}, 1);
  for (std::size_t i = w.size() - 1; i-- > 0;) acc = assoc_commutator(AssocPoly(Word{w[i]}, 1), acc);
  return acc;
}

struct BchMemo {
  std::mutex mutex;
  std::map<int, AssocPoly> assoc;
  std::map<std::pair<int, int>, FreeLieElem> mbrace;
};

BchMemo& memo() {
  static BchMemo m;
  return m;
}

}  // namespace

AssocPoly bch_assoc(int N) {
  if (N < 1) throw std::invalid_argument("bch: degree must be at least 1");
  {
    auto& m = memo();
    std::lock_guard lock(m.mutex);
    auto it = m.assoc.find(N);
    if (it != m.assoc.end()) return it->second;
  }
  AssocPoly prod = assoc_multiply(assoc_exp(AssocPoly(Word{0}, 1), N), assoc_exp(AssocPoly(Word{1}, 1), N), N);
  prod.add(Word{}, -1);
  AssocPoly result = assoc_log1p(prod, N);
  auto& m = memo();
  std::lock_guard lock(m.mutex);
  m.assoc.emplace(N, result);
  return result;
}

FreeLieElem bch(int N) {
  AssocPoly lg = bch_assoc(N);
  AssocPoly projected;
  for (const auto& [w, c] : lg) projected.add(dynkin(w), c / static_cast<long>(w.size()));
  return to_lie(2, projected);
}

FreeLieElem bch_by_recursion(int N) {
  if (N < 1) throw std::invalid_argument("bch: degree must be at least 1");
  const FreeLieElem x = FreeLieElem::letter(2, 0), y = FreeLieElem::letter(2, 1);
  // Z[m] is the part of Z(t) of order t^m.
  std::vector<FreeLieElem> Z(N + 1, FreeLieElem{2, {}});
  Z[0] = x;
  for (int m = 1; m <= N; ++m) {
    // Coefficient of t^{m-1} in sum_k todd_k ad_Z^k(y), using only Z[0..m-1].
    // A[j] is the t^j part of ad_Z^k(y) for the current k.
    std::vector<FreeLieElem> A(m, FreeLieElem{2, {}});
    A[0] = y;
    FreeLieElem rhs = A[m - 1];
    for (int k = 1; k < N; ++k) {
      std::vector<FreeLieElem> next(m, FreeLieElem{2, {}});
      for (int j = 0; j < m; ++j)
        for (int i = 0; i + j < m; ++i) {
          if (A[j].is_zero() || Z[i].is_zero()) continue;
          next[i + j] += truncate(lie_bracket(Z[i], A[j]), N);
        }
      A = std::move(next);
      rhs += todd_coefficient(k) * A[m - 1];
    }
    Z[m] = Rational(1, m) * truncate(rhs, N);
  }
  FreeLieElem out{2, {}};
  for (const auto& z : Z) out += z;
  return truncate(out, N);
}

FreeLieElem multilinear_part(const FreeLieElem& s, const std::vector<int>& multidegree) {
  return {s.alphabet, s.terms.filter([&](const Word& w) {
            std::vector<int> count(multidegree.size(), 0);
            for (int a : w) {
              if (a >= static_cast<int>(count.size())) return false;
              ++count[a];
            }
            return count == multidegree;
          })};
}

FreeLieElem mbrace(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("mbrace: need p,q >= 0 and p+q >= 1");
  const int k = p + q;
  if (q == 0) return p == 1 ? FreeLieElem::letter(1, 0) : FreeLieElem{k, {}};
  if (p == 0) return q == 1 ? FreeLieElem::letter(1, 0) : FreeLieElem{k, {}};
  {
    auto& m = memo();
    std::lock_guard lock(m.mutex);
    auto it = m.mbrace.find({p, q});
    if (it != m.mbrace.end()) return it->second;
  }
  // Polarize every word of bidegree (p, q): assign x_1..x_p to the x-slots and
  // y_1..y_q to the y-slots in all possible ways.
  AssocPoly lg = homogeneous_part(bch_assoc(k), k);
  std::vector<int> xs(p), ys(q);
  AssocPoly multilinear;
  for (const auto& [w, c] : lg) {
    if (std::count(w.begin(), w.end(), 0) != p) continue;
    std::iota(xs.begin(), xs.end(), 0);
    do {
      std::iota(ys.begin(), ys.end(), p);
      do {
        Word u(k);
        int xi = 0, yi = 0;
        for (int i = 0; i < k; ++i) u[i] = w[i] == 0 ? xs[xi++] : ys[yi++];
        multilinear.add(u, c);
      } while (std::next_permutation(ys.begin(), ys.end()));
    } while (std::next_permutation(xs.begin(), xs.end()));
  }
  FreeLieElem result = to_lie(k, multilinear);
  auto& m = memo();
  std::lock_guard lock(m.mutex);
  m.mbrace.emplace(std::make_pair(p, q), result);
  return result;
}

FreeLieElem mbrace_p1_closed(int p) {
  if (p < 1) throw std::invalid_argument("mbrace_p1_closed: p must be at least 1");
  std::vector<int> xs(p);
  std::iota(xs.begin(), xs.end(), 0);
  AssocPoly sum;
  do {
    AssocPoly acc(Word{p}, 1);
    for (int i = p; i-- > 0;) acc = assoc_commutator(AssocPoly(Word{xs[i]}, 1), acc);
    sum += acc;
  } while (std::next_permutation(xs.begin(), xs.end()));
  return todd_coefficient(p) * to_lie(p + 1, sum);
}

std::string lyndon_bracket_string(const Word& w, const std::vector<std::string>& letters) {
  if (w.size() == 1) return letters.at(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + lyndon_bracket_string(u, letters) + "," + lyndon_bracket_string(v, letters) + "]";
}

std::string to_string(const FreeLieElem& x, const std::vector<std::string>& letters) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : x.terms) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + lyndon_bracket_string(w, letters);
  }
  return s;
}

}  // namespace pbw
