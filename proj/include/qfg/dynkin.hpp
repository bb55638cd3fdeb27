#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qfg {

/// A connected subdiagram [lo, hi] of a type A Dynkin diagram. Nodes are
/// 1-based.
struct Subdiagram {
  int lo = 1;
  int hi = 1;

  constexpr int size() const noexcept { return hi - lo + 1; }
  constexpr bool contains(int i) const noexcept { return lo <= i && i <= hi; }
  constexpr bool contains(const Subdiagram& other) const noexcept {
    return lo <= other.lo && other.hi <= hi;
  }

  friend constexpr auto operator<=>(const Subdiagram&, const Subdiagram&) = default;
};

/// The interval [i, j] regardless of argument order.
constexpr Subdiagram interval(int i, int j) noexcept {
  return {std::min(i, j), std::max(i, j)};
}

/// Ambient diagram of type A_n.
class DynkinA {
 public:
  explicit DynkinA(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("rank must be positive, got " + std::to_string(n));
  }

  int rank() const noexcept { return n_; }
  Subdiagram nodes() const noexcept { return {1, n_}; }
  bool has_node(int i) const noexcept { return 1 <= i && i <= n_; }

  void require_node(int i) const {
    if (!has_node(i)) {
      throw std::out_of_range("node " + std::to_string(i) + " outside A" + std::to_string(n_));
    }
  }

  void require_subdiagram(const Subdiagram& j) const {
    if (j.lo > j.hi || !nodes().contains(j)) {
      throw std::out_of_range("subdiagram [" + std::to_string(j.lo) + "," + std::to_string(j.hi) +
                              "] outside A" + std::to_string(n_));
    }
  }

  friend bool operator==(const DynkinA&, const DynkinA&) = default;

 private:
  int n_;
};

inline int distance(const DynkinA& d, int i, int j) {
  d.require_node(i);
  d.require_node(j);
  return std::abs(i - j);
}

/// Distance from `inner` to the boundary nodes {outer.lo, outer.hi} of `outer`.
inline int boundary_distance_within(const Subdiagram& outer, const Subdiagram& inner) {
  if (inner.lo > inner.hi || !outer.contains(inner)) {
    throw std::out_of_range("subdiagram not contained in its ambient interval");
  }
  return std::min(inner.lo - outer.lo, outer.hi - inner.hi);
}

inline int boundary_distance(const DynkinA& d, const Subdiagram& j) {
  d.require_subdiagram(j);
  return boundary_distance_within(d.nodes(), j);
}

/// Image of `i` under the non-trivial diagram automorphism of `j`.
inline int dual_node(const Subdiagram& j, int i) {
  if (!j.contains(i)) {
    throw std::out_of_range("node " + std::to_string(i) + " outside subdiagram");
  }
  return j.lo + j.hi - i;
}

/// Dual Coxeter number of the type A_{|j|} algebra on `j`.
inline int dual_coxeter(const Subdiagram& j) {
  if (j.lo > j.hi) throw std::out_of_range("empty subdiagram");
  return j.size() + 1;
}

inline int dual_node(const DynkinA& d, int i) {
  d.require_node(i);
  return dual_node(d.nodes(), i);
}

inline int dual_coxeter(const DynkinA& d) { return dual_coxeter(d.nodes()); }

}  // namespace qfg
