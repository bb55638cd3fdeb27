#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qfg/dynkin.hpp"
#include "qfg/weights.hpp"

namespace qfg {

/// Finite set of positive center differences, stored sorted ascending.
class RedSet {
 public:
  RedSet() = default;
  explicit RedSet(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }

  bool contains(int x) const { return std::binary_search(values_.begin(), values_.end(), x); }
  bool empty() const noexcept { return values_.empty(); }
  std::size_t size() const noexcept { return values_.size(); }
  int min() const { return values_.front(); }
  int max() const { return values_.back(); }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const RedSet&, const RedSet&) = default;

 private:
  std::vector<int> values_;
};

/// { r + s - 2p : 0 <= p < min(r, s) }, the differences at which two KR
/// strings on the same node are in special position.
inline RedSet special_set(int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("KR lengths must be positive");
  std::vector<int> v;
  for (int p = 0; p < std::min(r, s); ++p) v.push_back(r + s - 2 * p);
  return RedSet(std::move(v));
}

/// { r + s + d(i,j) - 2p : -d([i,j], boundary of J) <= p < min(r, s) }.
inline RedSet red_set(const Subdiagram& j_sub, int i, int j, int r, int s) {
  if (r < 1 || s < 1) throw std::invalid_argument("KR lengths must be positive");
  if (!j_sub.contains(i) || !j_sub.contains(j)) {
    throw std::out_of_range("red_set nodes outside subdiagram");
  }
  const int d = std::abs(i - j);
  const int reach = boundary_distance_within(j_sub, interval(i, j));
  std::vector<int> v;
  for (int p = -reach; p < std::min(r, s); ++p) v.push_back(r + s + d - 2 * p);
  return RedSet(std::move(v));
}

inline RedSet red_set(const DynkinA& d, int i, int j, int r, int s) {
  d.require_node(i);
  d.require_node(j);
  return red_set(d.nodes(), i, j, r, s);
}

/// V(k1) (x) V(k2) is reducible.
inline bool is_reducible_pair(const KRFactor& k1, const KRFactor& k2, const DynkinA& d) {
  return red_set(d, k1.node, k2.node, k1.length, k2.length).contains(std::abs(k1.center - k2.center));
}

/// For a reducible pair: whether V(k1) (x) V(k2) is highest-l-weight, i.e.
/// whether the arrow points k1 -> k2.
inline bool hlw_first(const KRFactor& k1, const KRFactor& k2, const DynkinA& d) {
  if (!is_reducible_pair(k1, k2, d)) {
    throw std::invalid_argument("orientation asked for an irreducible pair");
  }
  return k1.center > k2.center;
}

/// Signed arrow rule of pseudo q-factorization graphs.
inline bool has_arrow(const KRFactor& from, const KRFactor& to, const DynkinA& d) {
  return red_set(d, from.node, to.node, from.length, to.length).contains(from.center - to.center);
}

}  // namespace qfg
