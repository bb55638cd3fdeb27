#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qfg/graph.hpp"

namespace qfg::oracle {

inline std::string show(const KRFactor& k) {
  std::ostringstream os;
  os << "kr(" << k.node << "," << k.center << "," << k.length << ")";
  return os.str();
}

/// Arrows stored in the graph coincide with the arrows recomputed from the
/// labels, and every arrow strictly decreases the center.
inline std::optional<std::string> arrow_determinism_violation(const PQGraph& g) {
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      const bool expected = a != b && red_set(g.diagram(), g.label_at(a).node, g.label_at(b).node,
                                              g.label_at(a).length, g.label_at(b).length)
                                          .contains(g.label_at(a).center - g.label_at(b).center);
      if (g.arrow_at(a, b) != expected) {
        return "arrow mismatch between " + show(g.label_at(a)) + " and " + show(g.label_at(b));
      }
      if (expected && g.label_at(a).center <= g.label_at(b).center) {
        return "arrow does not decrease the center: " + show(g.label_at(a));
      }
    }
  }
  return std::nullopt;
}

/// In a q-factorization graph, two q-factors one of which divides the other
/// are incomparable.
inline std::optional<std::string> divisibility_incomparability_violation(const PQGraph& g) {
  const ReachabilityOrder order(g);
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      const auto& x = g.label_at(a);
      const auto& y = g.label_at(b);
      const bool divides = x.node == y.node && x.length <= y.length && x.min_center() >= y.min_center() &&
                           x.max_center() <= y.max_center() && (x.min_center() - y.min_center()) % 2 == 0;
      if (divides && order.comparable_at(a, b)) {
        return show(x) + " divides " + show(y) + " but they are comparable";
      }
    }
  }
  return std::nullopt;
}

/// Directed paths with at least two vertices, as index lists from tail to
/// head; stops after `limit` paths.
inline std::vector<std::vector<std::size_t>> directed_paths(const PQGraph& g, std::size_t limit = 20000) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    path.push_back(v);
    if (path.size() >= 2) out.push_back(path);
    for (auto w : g.successors(v)) {
      if (out.size() >= limit) break;
      walk(w);
    }
    path.pop_back();
  };
  for (std::size_t v = 0; v < g.size() && out.size() < limit; ++v) walk(v);
  return out;
}

/// Along a path with strictly increasing centers m_1 < ... < m_N, write
/// m_l - m_k = r_l + r_k + d(i_l, i_k) - 2 p_{l,k}. Then every p_{l,k} is an
/// integer, p_{N,1} < min(r_1, r_N), and p_{N,1} < p_{l,k} < min(r_k, r_l)
/// for every other pair k < l.
inline std::optional<std::string> path_bound_violation(const PQGraph& g, std::vector<std::size_t> path) {
  std::reverse(path.begin(), path.end());
  const auto n = path.size();
  auto lab = [&](std::size_t k) -> const KRFactor& { return g.label_at(path[k]); };
  auto p_of = [&](std::size_t l, std::size_t k) -> std::optional<int> {
    const int twice = lab(l).length + lab(k).length + std::abs(lab(l).node - lab(k).node) -
                      (lab(l).center - lab(k).center);
    if (twice % 2 != 0) return std::nullopt;
    return twice / 2;
  };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (lab(k + 1).center <= lab(k).center) return "path centers are not increasing";
  }
  const auto outer = p_of(n - 1, 0);
  if (!outer) return "p_{N,1} is not an integer";
  if (*outer >= std::min(lab(0).length, lab(n - 1).length)) return "p_{N,1} exceeds its bound";
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const auto p = p_of(l, k);
      if (!p) return "p_{l,k} is not an integer";
      if (k == 0 && l == n - 1) continue;
      if (!(*outer < *p && *p < std::min(lab(k).length, lab(l).length))) {
        std::ostringstream os;
        os << "bound fails for pair (" << k + 1 << "," << l + 1 << ") on a path of length " << n;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> any_path_bound_violation(const PQGraph& g, std::size_t limit = 20000) {
  for (const auto& path : directed_paths(g, limit)) {
    if (auto v = path_bound_violation(g, path)) return v;
  }
  return std::nullopt;
}

}  // namespace qfg::oracle
