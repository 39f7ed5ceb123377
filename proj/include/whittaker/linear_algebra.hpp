#pragma once

#include <map>
#include <utility>
#include <vector>

#include "whittaker/sparse.hpp"

namespace whittaker {

/// Exact row-echelon basis of a subspace of sparse vectors. Rows are kept
/// fully reduced with unit pivots; the pivot of a row is its leading key
/// under the vector's key order.
template <class Key, class Compare>
class EchelonBasis {
 public:
  using Vector = SparseCombination<Key, Compare>;

  /// Remainder of v modulo the span.
  Vector reduce(Vector v) const {
    for (const auto& [pivot, row] : rows_) {
      Rational c = v.coefficient(pivot);
      if (c != 0) v.add_scaled(row, -c);
    }
    return v;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  /// Adds v to the span; false when v was already in it.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.is_zero()) return false;
    Key pivot = r.leading().first;
    r *= 1 / r.leading().second;
    for (auto& [p, row] : rows_) {
      Rational c = row.coefficient(pivot);
      if (c != 0) row.add_scaled(r, -c);
    }
    rows_.emplace(std::move(pivot), std::move(r));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  /// Rows in pivot order (reduced row-echelon form).
  std::vector<Vector> rows() const {
    std::vector<Vector> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
  }

  const std::map<Key, Vector, Compare>& pivots() const { return rows_; }

 private:
  std::map<Key, Vector, Compare> rows_;
};

/// Kernel of a linear map given on a spanning set of the domain as pairs
/// (d_i, image(d_i)): returns a spanning set of the combinations
/// sum c_i d_i with sum c_i image(d_i) = 0. Images are eliminated in a
/// single ordered pass against an echelon (not fully reduced) list.
template <class DomainVector, class ImageKey, class ImageCompare>
std::vector<DomainVector> kernel_spanning_set(
    const std::vector<std::pair<DomainVector, SparseCombination<ImageKey, ImageCompare>>>& columns) {
  using ImageVector = SparseCombination<ImageKey, ImageCompare>;
  std::map<ImageKey, std::pair<ImageVector, DomainVector>, ImageCompare> echelon;
  std::vector<DomainVector> kernel;
  for (const auto& [d, image] : columns) {
    ImageVector r = image;
    DomainVector t = d;
    for (const auto& [pivot, row] : echelon) {
      Rational c = r.coefficient(pivot);
      if (c == 0) continue;
      c /= row.first.leading().second;
      r.add_scaled(row.first, -c);
      t.add_scaled(row.second, -c);
    }
    if (r.is_zero()) {
      if (!t.is_zero()) kernel.push_back(std::move(t));
    } else {
      ImageKey pivot = r.leading().first;
      echelon.emplace(std::move(pivot), std::make_pair(std::move(r), std::move(t)));
    }
  }
  return kernel;
}

}  // namespace whittaker
