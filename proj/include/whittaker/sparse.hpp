#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "whittaker/rational.hpp"

namespace whittaker {

/// Exponent tuple aligned with an ordered generator list.
using Exponents = std::vector<int>;

inline long total_degree(const Exponents& m) { return std::accumulate(m.begin(), m.end(), 0L); }

/// Canonical monomial order: higher total degree first, then reverse
/// lexicographic on the exponent tuple (f^2 before f*q before q^2).
/// Iteration, rendering and echelon pivots all follow this order, so the
/// first stored term is the leading term.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = total_degree(a);
    long db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Finite sum of keys with nonzero rational coefficients.
template <class Key, class Compare = std::less<Key>>
class SparseCombination {
 public:
  using map_type = std::map<Key, Rational, Compare>;
  using const_iterator = typename map_type::const_iterator;

  SparseCombination() = default;

  void add(const Key& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += scale * other
  void add_scaled(const SparseCombination& other, const Rational& scale) {
    if (scale == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * scale);
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  /// Leading (first in order) entry; requires a nonzero combination.
  const std::pair<const Key, Rational>& leading() const { return *terms_.begin(); }

  SparseCombination& operator+=(const SparseCombination& o) {
    add_scaled(o, Rational(1));
    return *this;
  }
  SparseCombination& operator-=(const SparseCombination& o) {
    add_scaled(o, Rational(-1));
    return *this;
  }
  SparseCombination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend SparseCombination operator+(SparseCombination a, const SparseCombination& b) { return a += b; }
  friend SparseCombination operator-(SparseCombination a, const SparseCombination& b) { return a -= b; }
  friend SparseCombination operator*(SparseCombination a, const Rational& s) { return a *= s; }
  friend SparseCombination operator*(const Rational& s, SparseCombination a) { return a *= s; }
  friend bool operator==(const SparseCombination& a, const SparseCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

}  // namespace whittaker
