#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pbw/rational.hpp"

namespace pbw {

/// Formal Q-linear combination of keys. Zero coefficients are never stored,
/// and iteration follows the key order, so printed output is deterministic.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Rational>;
  using const_iterator = typename Map::const_iterator;

  LinComb() = default;
  LinComb(const Key& key, const Rational& coeff) { add(key, coeff); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& other, const Rational& scale = 1) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LinComb& operator+=(const LinComb& other) { add(other); return *this; }
  LinComb& operator-=(const LinComb& other) { add(other, -1); return *this; }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) { terms_.clear(); return *this; }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= -1; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  template <class Pred>
  LinComb filter(Pred&& keep) const {
    LinComb out;
    for (const auto& [k, c] : terms_)
      if (keep(k)) out.terms_.emplace(k, c);
    return out;
  }

 private:
  Map terms_;
};

/// A linear map given column by column on an explicit domain basis. Keys of
/// the domain that are absent from `columns` map to zero.
template <class In, class Out>
struct LinearMap {
  std::vector<In> domain;
  std::map<In, LinComb<Out>> columns;

  LinComb<Out> apply(const In& key) const {
    auto it = columns.find(key);
    return it == columns.end() ? LinComb<Out>{} : it->second;
  }

  LinComb<Out> apply(const LinComb<In>& v) const {
    LinComb<Out> out;
    for (const auto& [k, c] : v) out.add(apply(k), c);
    return out;
  }

  void set(const In& key, LinComb<Out> image) {
    if (image.is_zero()) columns.erase(key);
    else columns[key] = std::move(image);
  }

  bool is_zero() const { return columns.empty(); }
};

/// Equality on the union of both domains.
template <class In, class Out>
bool maps_equal(const LinearMap<In, Out>& a, const LinearMap<In, Out>& b) {
  for (const auto& k : a.domain)
    if (!(a.apply(k) == b.apply(k))) return false;
  for (const auto& k : b.domain)
    if (!(a.apply(k) == b.apply(k))) return false;
  return true;
}

template <class In, class Mid, class Out>
LinearMap<In, Out> compose(const LinearMap<Mid, Out>& outer, const LinearMap<In, Mid>& inner) {
  LinearMap<In, Out> out;
  out.domain = inner.domain;
  for (const auto& k : inner.domain) out.set(k, outer.apply(inner.apply(k)));
  return out;
}

}  // namespace pbw
