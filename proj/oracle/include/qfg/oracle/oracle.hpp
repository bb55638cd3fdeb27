#pragma once

// Brute-force reference implementations. Nothing here calls the routines it
// is meant to check: q-strings are fused by set arithmetic, total order is
// decided by an explicit closure on every vertex subset, and the
// monochromatic factorization computes its own reducibility sets.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfg/graph.hpp"
#include "qfg/weights.hpp"

namespace qfg::oracle {

/// Reproducible generator keyed by (seed, stream); distinct streams give
/// independent sequences so each test case can be replayed on its own.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  std::size_t index(std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(engine_);
  }

  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

 private:
  std::mt19937_64 engine_;
};

class ConfluenceViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

struct Str {
  int node;
  int lo;
  int hi;
  auto operator<=>(const Str&) const = default;
};

inline bool mergeable(const Str& x, const Str& y) {
  if (x.node != y.node || (x.lo - y.lo) % 2 != 0) return false;
  const bool touching = std::max(x.lo, y.lo) <= std::min(x.hi, y.hi) + 2;
  const bool nested = (x.lo <= y.lo && y.hi <= x.hi) || (y.lo <= x.lo && x.hi <= y.hi);
  return touching && !nested;
}

inline std::string describe(const std::vector<std::pair<Str, Str>>& schedule) {
  std::ostringstream os;
  for (const auto& [x, y] : schedule) {
    os << "(" << x.node << ":[" << x.lo << "," << x.hi << "]+[" << y.lo << "," << y.hi << "]) ";
  }
  return os.str();
}

inline std::vector<KRFactor> to_kr(std::vector<Str> strings) {
  std::vector<KRFactor> out;
  for (const auto& s : strings) out.push_back({s.node, (s.lo + s.hi) / 2, (s.hi - s.lo) / 2 + 1});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Runs the merge-until-stuck process under `trials` random schedules and
/// requires every run to end in the same multiset of q-strings.
inline std::vector<KRFactor> brute_qfact(const DrinfeldPolynomial& p, int trials, std::uint64_t seed) {
  std::vector<KRFactor> first;
  std::string first_schedule;
  for (int t = 0; t < std::max(trials, 1); ++t) {
    Rng rng(seed, static_cast<std::uint64_t>(t));
    std::vector<detail::Str> state;
    for (const auto& w : p.factors()) state.push_back({w.node, w.center, w.center});
    std::vector<std::pair<detail::Str, detail::Str>> schedule;
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> options;
      for (std::size_t a = 0; a < state.size(); ++a) {
        for (std::size_t b = a + 1; b < state.size(); ++b) {
          if (detail::mergeable(state[a], state[b])) options.emplace_back(a, b);
        }
      }
      if (options.empty()) break;
      const auto [a, b] = options[rng.index(options.size())];
      const auto x = state[a];
      const auto y = state[b];
      schedule.emplace_back(x, y);
      state[a] = {x.node, std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
      const int lo = std::max(x.lo, y.lo);
      const int hi = std::min(x.hi, y.hi);
      if (lo <= hi) {
        state[b] = {x.node, lo, hi};
      } else {
        state.erase(state.begin() + static_cast<std::ptrdiff_t>(b));
      }
    }
    auto result = detail::to_kr(state);
    if (t == 0) {
      first = result;
      first_schedule = detail::describe(schedule);
    } else if (result != first) {
      throw ConfluenceViolation("schedules disagree: [" + first_schedule + "] vs [" +
                                detail::describe(schedule) + "]");
    }
  }
  return first;
}

/// Checks all 2^|V| vertex subsets for total order and keeps the
/// inclusion-maximal ones.
inline std::vector<std::vector<VertexId>> brute_mtos(const PQGraph& g) {
  const auto n = g.size();
  if (n > 16) throw std::length_error("brute_mtos supports at most 16 vertices");
  std::vector<std::uint32_t> ordered;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1U) members.push_back(k);
    }
    const auto m = members.size();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) reach[a][b] = g.arrow_at(members[a], members[b]);
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          if (reach[a][k] && reach[k][b]) reach[a][b] = true;
        }
      }
    }
    bool total = true;
    for (std::size_t a = 0; a < m && total; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (!reach[a][b] && !reach[b][a]) {
          total = false;
          break;
        }
      }
    }
    if (total) ordered.push_back(mask);
  }
  std::vector<std::vector<VertexId>> out;
  for (auto mask : ordered) {
    const bool maximal = std::none_of(ordered.begin(), ordered.end(), [&](std::uint32_t o) {
      return o != mask && (o & mask) == mask;
    });
    if (!maximal) continue;
    std::vector<VertexId> ids;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1U) ids.push_back(g.id_at(k));
    }
    out.push_back(std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Factorization of a single-node polynomial by repeatedly splitting off the
/// radical of each connected cluster of centers.
inline std::vector<DrinfeldPolynomial> iterated_bar_factorization(const DrinfeldPolynomial& p) {
  const auto& d = p.diagram();
  std::vector<FundamentalWeight> all = p.factors();
  if (all.empty()) return {};
  const int node = all.front().node;
  for (const auto& w : all) {
    if (w.node != node) throw std::invalid_argument("iterated_bar_factorization needs one node");
  }
  const int reach = std::min(node - 1, d.rank() - node);
  auto linked = [&](int x, int y) {
    const int gap = std::abs(x - y);
    return gap % 2 == 0 && gap >= 2 && gap <= 2 + 2 * reach;
  };

  std::vector<DrinfeldPolynomial> out;
  std::vector<std::vector<int>> pending;
  {
    std::vector<int> centers;
    for (const auto& w : all) centers.push_back(w.center);
    pending.push_back(centers);
  }
  while (!pending.empty()) {
    auto centers = pending.back();
    pending.pop_back();
    // Clusters by connectivity of the "linked" relation.
    const auto n = centers.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (linked(centers[a], centers[b])) parent[find(a)] = find(b);
      }
    }
    std::map<std::size_t, std::vector<int>> clusters;
    for (std::size_t a = 0; a < n; ++a) clusters[find(a)].push_back(centers[a]);
    for (auto& [root, members] : clusters) {
      std::sort(members.begin(), members.end());
      std::vector<int> distinct = members;
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t k = 0; k + 1 < distinct.size(); ++k) {
        if (!linked(distinct[k], distinct[k + 1])) {
          throw std::invalid_argument("cluster radical is not a segment");
        }
      }
      DrinfeldPolynomial factor(d);
      for (int c : distinct) factor.multiply({node, c});
      out.push_back(std::move(factor));
      std::vector<int> rest;
      std::set_difference(members.begin(), members.end(), distinct.begin(), distinct.end(),
                          std::back_inserter(rest));
      if (!rest.empty()) pending.push_back(std::move(rest));
    }
  }
  return out;
}

struct RandomBounds {
  int n = 3;
  int max_factors = 6;
  int center_min = -10;
  int center_max = 10;
  bool snake_support_only = false;
  int max_multiplicity = 3;
};

/// Random prime snake of length 1..max_len: a walk over nodes with each step
/// drawn from the reducibility set of the consecutive pair. Computes the
/// sets from the defining formula.
inline std::vector<FundamentalWeight> random_prime_snake(Rng& rng, const DynkinA& d, int max_len,
                                                         int center_min, int center_max) {
  const int len = rng.uniform(1, std::max(1, max_len));
  std::vector<FundamentalWeight> out;
  out.push_back({rng.uniform(1, d.rank()), rng.uniform(center_min, center_max)});
  while (static_cast<int>(out.size()) < len) {
    const auto& last = out.back();
    const int next = rng.uniform(1, d.rank());
    const int dist = std::abs(next - last.node);
    const int reach = std::min(std::min(last.node, next) - 1, d.rank() - std::max(last.node, next));
    // Steps are 2 + dist - 2p for -reach <= p < 1.
    const int p = -rng.uniform(0, reach);
    out.push_back({next, last.center + 2 + dist - 2 * p});
  }
  return out;
}

inline DrinfeldPolynomial random_drinfeld(std::uint64_t seed, const RandomBounds& b) {
  DynkinA d(b.n);
  Rng rng(seed, 0x5eed);
  DrinfeldPolynomial p(d);
  const int budget = std::max(1, b.max_factors);
  if (!b.snake_support_only) {
    const int count = rng.uniform(1, budget);
    for (int k = 0; k < count; ++k) p.multiply({rng.uniform(1, b.n), rng.uniform(b.center_min, b.center_max)});
    return p;
  }
  const auto snake = random_prime_snake(rng, d, budget, b.center_min, b.center_max);
  int used = 0;
  for (const auto& w : snake) {
    p.multiply(w);
    ++used;
  }
  for (const auto& w : snake) {
    const int extra = rng.uniform(0, std::max(0, b.max_multiplicity - 1));
    for (int k = 0; k < extra && used < budget; ++k, ++used) p.multiply(w);
  }
  return p;
}

}  // namespace qfg::oracle
