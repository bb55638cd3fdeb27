#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qfg/reducibility.hpp"
#include "qfg/weights.hpp"

namespace qfg {

/// Canonical [min, max] form of a KR factor's centers.
struct QString {
  int node = 1;
  int lo = 0;
  int hi = 0;

  static QString of(const KRFactor& k) noexcept { return {k.node, k.min_center(), k.max_center()}; }

  KRFactor to_kr() const {
    if (hi < lo || (hi - lo) % 2 != 0) throw std::invalid_argument("malformed q-string");
    return {node, (lo + hi) / 2, (hi - lo) / 2 + 1};
  }

  friend constexpr auto operator<=>(const QString&, const QString&) = default;
};

inline bool in_special_position(const KRFactor& k1, const KRFactor& k2) {
  return k1.node == k2.node &&
         special_set(k1.length, k2.length).contains(std::abs(k1.center - k2.center));
}

struct Fusion {
  KRFactor big;
  std::optional<KRFactor> small;
  bool pure = false;
};

/// Union and intersection of two q-strings in special position.
inline Fusion fuse(const KRFactor& k1, const KRFactor& k2) {
  if (!in_special_position(k1, k2)) throw std::invalid_argument("fusion of a non-special pair");
  const auto s1 = QString::of(k1);
  const auto s2 = QString::of(k2);
  Fusion f;
  f.big = QString{k1.node, std::min(s1.lo, s2.lo), std::max(s1.hi, s2.hi)}.to_kr();
  const int lo = std::max(s1.lo, s2.lo);
  const int hi = std::min(s1.hi, s2.hi);
  if (lo <= hi) f.small = QString{k1.node, lo, hi}.to_kr();
  f.pure = !f.small.has_value();
  return f;
}

/// Unique factorization into KR factors with no same-node pair in special
/// position, sorted by (node, center, length).
inline std::vector<KRFactor> q_factorization(const DrinfeldPolynomial& p) {
  std::vector<KRFactor> work;
  for (const auto& w : p.factors()) work.push_back({w.node, w.center, 1});

  for (;;) {
    std::sort(work.begin(), work.end());
    bool fused = false;
    for (std::size_t a = 0; a < work.size() && !fused; ++a) {
      for (std::size_t b = a + 1; b < work.size(); ++b) {
        if (work[b].node != work[a].node) break;
        if (!in_special_position(work[a], work[b])) continue;
        const auto f = fuse(work[a], work[b]);
        work[a] = f.big;
        if (f.small) {
          work[b] = *f.small;
        } else {
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(b));
        }
        fused = true;
        break;
      }
    }
    if (!fused) return work;
  }
}

}  // namespace qfg
