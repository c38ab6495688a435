#include "pbw/symgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pbw {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i >= n) throw std::out_of_range("adjacent transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images[i - 1], p.images[i]);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation arity mismatch");
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[i] = images[other.images[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out.images[images[i]] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::inversions() const {
  int c = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++c;
  return c;
}

std::vector<int> Permutation::bubble_word() const {
  // Sorting the one-line array by adjacent swaps multiplies on the right:
  // g * tau_{s_1} * ... * tau_{s_d} = id, hence g = tau_{s_d} ... tau_{s_1}.
  std::vector<int> a = images, swaps;
  for (std::size_t pass = 0; pass < a.size(); ++pass)
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
      }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.images.begin(), p.images.end()));
  return out;
}

GroupAlgElem& GroupAlgElem::operator+=(const GroupAlgElem& o) {
  if (n != o.n) throw std::invalid_argument("group algebra arity mismatch");
  terms += o.terms;
  return *this;
}

GroupAlgElem& GroupAlgElem::operator-=(const GroupAlgElem& o) {
  if (n != o.n) throw std::invalid_argument("group algebra arity mismatch");
  terms -= o.terms;
  return *this;
}

GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b) {
  if (a.n != b.n) throw std::invalid_argument("group algebra arity mismatch");
  GroupAlgElem out = GroupAlgElem::zero(a.n);
  for (const auto& [g, x] : a.terms)
    for (const auto& [h, y] : b.terms) out.terms.add(g * h, x * y);
  return out;
}

GroupAlgElem symmetrizer(int n) {
  if (n < 1) throw std::invalid_argument("symmetrizer: n must be at least 1");
  Rational c(Integer(1), factorial(static_cast<unsigned>(n)));
  GroupAlgElem out = GroupAlgElem::zero(n);
  for (const auto& p : all_permutations(n)) out.terms.add(p, c);
  return out;
}

GroupAlgElem adjacent_transposition(int n, int i) { return GroupAlgElem::of(Permutation::adjacent(n, i)); }

std::vector<GroupAlgElem> ideal_decomposition(int n) {
  if (n < 2) throw std::invalid_argument("ideal_decomposition: n must be at least 2");
  std::vector<GroupAlgElem> a(n - 1, GroupAlgElem::zero(n));
  Rational c(Integer(1), factorial(static_cast<unsigned>(n)));
  // 1 - g_1...g_d = sum_k (1 - g_k) g_{k+1}...g_d.
  for (const auto& g : all_permutations(n)) {
    auto word = g.bubble_word();
    Permutation suffix = Permutation::identity(n);
    for (std::size_t k = word.size(); k-- > 0;) {
      a[word[k] - 1].terms.add(suffix, c);
      suffix = Permutation::adjacent(n, word[k]) * suffix;
    }
  }
  return a;
}

GroupAlgElem recombine_decomposition(int n, const std::vector<GroupAlgElem>& a) {
  GroupAlgElem out = GroupAlgElem::zero(n);
  for (std::size_t i = 0; i < a.size(); ++i)
    out += (GroupAlgElem::one(n) - adjacent_transposition(n, static_cast<int>(i) + 1)) * a[i];
  return out;
}

std::string to_string(const GroupAlgElem& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*[";
    for (std::size_t i = 0; i < p.images.size(); ++i) os << (i ? " " : "") << p.images[i];
    os << "]";
  }
  return os.str();
}

}  // namespace pbw
