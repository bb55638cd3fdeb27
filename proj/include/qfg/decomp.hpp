#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qfg/errors.hpp"
#include "qfg/graph.hpp"
#include "qfg/snake.hpp"

namespace qfg {

/// Ordered partition of a graph's vertex set. Each part is sorted by id.
struct Multicut {
  std::vector<std::vector<VertexId>> parts;

  friend bool operator==(const Multicut&, const Multicut&) = default;
};

struct QuochainLimits {
  std::size_t max_vertices = 14;
  // Guards the explicit enumeration, whose size is factorial in the number
  // of interchangeable parts.
  std::size_t max_quochains = 1'000'000;
};

namespace detail {

using Mask = std::uint64_t;

inline void require_mask_capacity(const PQGraph& g) {
  if (g.size() > 64) throw std::length_error("mtos enumeration supports at most 64 vertices");
}

inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<VertexId> ids_of(const PQGraph& g, Mask m) {
  std::vector<VertexId> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (m >> k & 1U) out.push_back(g.id_at(k));
  }
  return out;
}

inline Mask mask_of(const PQGraph& g, std::span<const VertexId> ids) {
  Mask m = 0;
  for (auto v : ids) m |= Mask{1} << g.index_of(v);
  return m;
}

/// Maximal totally ordered subsets of the subgraph induced on `within`.
/// A vertex set is totally ordered iff, sorted by center, consecutive
/// members are joined by an arrow; so maximal ones are vertex sets of
/// source-to-sink paths of the induced subgraph that no other such set
/// strictly contains.
inline std::vector<Mask> mtos_masks(const PQGraph& g, Mask within) {
  const auto n = g.size();
  std::vector<Mask> candidates;

  std::function<void(std::size_t, Mask)> walk = [&](std::size_t v, Mask path) {
    bool extended = false;
    for (auto w : g.successors(v)) {
      if (!(within >> w & 1U)) continue;
      extended = true;
      walk(w, path | Mask{1} << w);
    }
    if (!extended) candidates.push_back(path);
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (!(within >> v & 1U)) continue;
    const bool source = std::none_of(g.predecessors(v).begin(), g.predecessors(v).end(),
                                     [&](auto u) { return within >> u & 1U; });
    if (source) walk(v, Mask{1} << v);
  }

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Mask> out;
  for (auto m : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](Mask o) { return o != m && (o & m) == m; });
    if (!dominated) out.push_back(m);
  }
  return out;
}

inline std::vector<KRFactor> labels_of(const PQGraph& g, Mask m) {
  std::vector<KRFactor> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (m >> k & 1U) out.push_back(g.label_at(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Greedy tie-break: least sorted label list, then least id list.
inline Mask pick_mtos(const PQGraph& g, const std::vector<Mask>& options) {
  return *std::min_element(options.begin(), options.end(), [&](Mask a, Mask b) {
    const auto la = labels_of(g, a);
    const auto lb = labels_of(g, b);
    if (la != lb) return la < lb;
    return ids_of(g, a) < ids_of(g, b);
  });
}

using Signature = std::vector<std::vector<KRFactor>>;

inline Signature signature(const PQGraph& g, const Multicut& q) {
  Signature s;
  for (const auto& part : q.parts) {
    std::vector<KRFactor> labels;
    for (auto v : part) labels.push_back(g.label(v));
    std::sort(labels.begin(), labels.end());
    s.push_back(std::move(labels));
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

/// Every inclusion-maximal vertex set whose induced subgraph is totally
/// ordered. Sets are sorted by id and listed in lexicographic order.
inline std::vector<std::vector<VertexId>> enumerate_mtos(const PQGraph& g) {
  detail::require_mask_capacity(g);
  std::vector<std::vector<VertexId>> out;
  for (auto m : detail::mtos_masks(g, detail::full_mask(g.size()))) out.push_back(detail::ids_of(g, m));
  std::sort(out.begin(), out.end());
  return out;
}

/// Throws unless `q` partitions the vertex set of `g`.
inline void require_multicut(const PQGraph& g, const Multicut& q) {
  std::vector<VertexId> all;
  for (const auto& part : q.parts) {
    if (part.empty()) throw std::invalid_argument("multicut has an empty part");
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  if (all != g.ids()) throw std::invalid_argument("parts do not partition the vertex set");
}

/// Whether each part is an mtos of the subgraph induced on the parts not yet
/// removed.
inline bool is_mtos_quochain(const PQGraph& g, const Multicut& q) {
  require_multicut(g, q);
  detail::require_mask_capacity(g);
  auto rest = detail::full_mask(g.size());
  for (const auto& part : q.parts) {
    const auto m = detail::mask_of(g, part);
    const auto options = detail::mtos_masks(g, rest);
    if (std::find(options.begin(), options.end(), m) == options.end()) return false;
    rest &= ~m;
  }
  return true;
}

/// Greedy mtos-quochain with the deterministic tie-break.
inline Multicut mtos_quochain(const PQGraph& g) {
  detail::require_mask_capacity(g);
  Multicut q;
  auto rest = detail::full_mask(g.size());
  while (rest != 0) {
    const auto m = detail::pick_mtos(g, detail::mtos_masks(g, rest));
    q.parts.push_back(detail::ids_of(g, m));
    rest &= ~m;
  }
  return q;
}

inline std::vector<Multicut> all_mtos_quochains(const PQGraph& g, const QuochainLimits& limits = {}) {
  if (g.size() > limits.max_vertices) {
    throw std::length_error("graph has " + std::to_string(g.size()) + " vertices; bound is " +
                            std::to_string(limits.max_vertices));
  }
  detail::require_mask_capacity(g);
  std::vector<Multicut> out;
  std::vector<detail::Mask> stack;
  std::function<void(detail::Mask)> grow = [&](detail::Mask rest) {
    if (rest == 0) {
      if (out.size() >= limits.max_quochains) {
        throw std::length_error("more than " + std::to_string(limits.max_quochains) + " quochains");
      }
      Multicut q;
      for (auto m : stack) q.parts.push_back(detail::ids_of(g, m));
      out.push_back(std::move(q));
      return;
    }
    for (auto m : detail::mtos_masks(g, rest)) {
      stack.push_back(m);
      grow(rest & ~m);
      stack.pop_back();
    }
  };
  grow(detail::full_mask(g.size()));
  return out;
}

/// Same length and parts matched bijectively by label multiset.
inline bool quochains_isomorphic(const Multicut& a, const Multicut& b, const PQGraph& g) {
  require_multicut(g, a);
  require_multicut(g, b);
  return a.parts.size() == b.parts.size() && detail::signature(g, a) == detail::signature(g, b);
}

/// Whether all mtos-quochains of `g` are pairwise isomorphic. Computed by
/// memoizing the set of reachable part signatures per remainder, which
/// avoids materializing every quochain.
inline bool unique_mtos_decomposition(const PQGraph& g, const QuochainLimits& limits = {}) {
  if (g.size() > limits.max_vertices) {
    throw std::length_error("graph has " + std::to_string(g.size()) + " vertices; bound is " +
                            std::to_string(limits.max_vertices));
  }
  detail::require_mask_capacity(g);
  using Sigs = std::set<detail::Signature>;
  std::map<detail::Mask, Sigs> memo;
  std::function<const Sigs&(detail::Mask)> solve = [&](detail::Mask rest) -> const Sigs& {
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    Sigs sigs;
    if (rest == 0) {
      sigs.insert(detail::Signature{});
    } else {
      for (auto m : detail::mtos_masks(g, rest)) {
        const auto part = detail::labels_of(g, m);
        for (const auto& tail : solve(rest & ~m)) {
          auto s = tail;
          s.insert(std::upper_bound(s.begin(), s.end(), part), part);
          sigs.insert(std::move(s));
        }
      }
    }
    return memo.emplace(rest, std::move(sigs)).first->second;
  };
  return solve(detail::full_mask(g.size())).size() == 1;
}

inline std::vector<DrinfeldPolynomial> part_polynomials(const PQGraph& g, const Multicut& q) {
  std::vector<DrinfeldPolynomial> out;
  for (const auto& part : q.parts) out.push_back(induced_subgraph(g, part).polynomial());
  return out;
}

enum class RouteStatus { snake_support_route, three_vertex_route, component_route, prime, unknown };

inline std::string_view to_string(RouteStatus s) {
  switch (s) {
    case RouteStatus::snake_support_route: return "snake-support-route";
    case RouteStatus::three_vertex_route: return "three-vertex-route";
    case RouteStatus::component_route: return "component-route";
    case RouteStatus::prime: return "prime";
    case RouteStatus::unknown: return "unknown";
  }
  return "unknown";
}

/// Candidate prime factorization. The product of `factors` is the input.
struct FactorizationResult {
  std::vector<DrinfeldPolynomial> factors;
  RouteStatus status = RouteStatus::unknown;
};

namespace detail {

inline DrinfeldPolynomial product(const DynkinA& d, const std::vector<DrinfeldPolynomial>& fs) {
  DrinfeldPolynomial p(d);
  for (const auto& f : fs) p *= f;
  return p;
}

inline void require_product(const DrinfeldPolynomial& p, const FactorizationResult& r) {
  if (!(product(p.diagram(), r.factors) == p)) {
    throw InvariantViolation("factor product differs from the input polynomial");
  }
}

}  // namespace detail

/// Prime factorization of a polynomial with snake support: per weakly
/// connected component of the fundamental graph, split off the radical of
/// the component and recurse on what is left.
inline FactorizationResult prime_factorize_snake_support(const DrinfeldPolynomial& p) {
  if (!has_snake_support(p)) throw std::invalid_argument("polynomial does not have snake support");
  FactorizationResult r;
  std::function<void(const DrinfeldPolynomial&)> peel = [&](const DrinfeldPolynomial& poly) {
    const auto g = fundamental_graph(poly);
    for (const auto& comp : connected_components(g)) {
      const auto piece = induced_subgraph(g, comp).polynomial();
      auto radical = bar(piece);
      auto rest = quotient(piece, radical);
      r.factors.push_back(std::move(radical));
      if (!rest.is_one()) peel(rest);
    }
  };
  peel(p);
  r.status = r.factors.size() == 1 ? RouteStatus::prime : RouteStatus::snake_support_route;
  detail::require_product(p, r);
  return r;
}

/// Three q-factors where the middle vertex is the common source or common
/// sink of both arrows. Outer vertices are ordered by (label, id).
struct AlternatingLine {
  KRFactor middle;
  std::array<KRFactor, 2> outer;
  bool middle_is_sink = false;

  int gap(std::size_t j) const { return std::abs(outer[j].center - middle.center); }
};

/// Recognizes a 3-vertex graph that is connected but not totally ordered.
inline std::optional<AlternatingLine> as_alternating_line(const PQGraph& g) {
  if (g.size() != 3 || g.arrows().size() != 2) return std::nullopt;
  for (std::size_t mid = 0; mid < 3; ++mid) {
    const auto in = g.predecessors(mid).size();
    const auto out = g.successors(mid).size();
    if (in != 2 && out != 2) continue;
    std::array<std::size_t, 2> others{};
    std::size_t k = 0;
    for (std::size_t v = 0; v < 3; ++v) {
      if (v != mid) others[k++] = v;
    }
    std::sort(others.begin(), others.end(), [&](auto a, auto b) {
      return g.label_at(a) != g.label_at(b) ? g.label_at(a) < g.label_at(b) : a < b;
    });
    return AlternatingLine{g.label_at(mid), {g.label_at(others[0]), g.label_at(others[1])}, in == 2};
  }
  return std::nullopt;
}

/// Minimal interval containing [i, j] on which `gap` lies in the restricted
/// reducibility set; scanned by size, then by left end.
inline std::optional<Subdiagram> minimal_subdiagram(const DynkinA& d, int i, int j, int gap, int r, int s) {
  const auto core = interval(i, j);
  for (int size = core.size(); size <= d.rank(); ++size) {
    for (int lo = 1; lo + size - 1 <= d.rank(); ++lo) {
      const Subdiagram cand{lo, lo + size - 1};
      if (!cand.contains(core)) continue;
      if (red_set(cand, i, j, r, s).contains(gap)) return cand;
    }
  }
  return std::nullopt;
}

/// Index of the outer q-factor that splits off as a prime factor, if any.
inline std::optional<std::size_t> alternating_line_split(const AlternatingLine& line, const DynkinA& d) {
  const int i = line.middle.node;
  const int r = line.middle.length;
  for (std::size_t j = 0; j < 2; ++j) {
    const std::size_t jp = 1 - j;
    const auto& oj = line.outer[j];
    const auto& ojp = line.outer[jp];
    const int mj = line.gap(j);
    const int mjp = line.gap(jp);
    const auto sub = minimal_subdiagram(d, i, oj.node, mj, r, oj.length);
    if (!sub) continue;
    if (!sub->contains(ojp.node)) continue;
    if (!red_set(*sub, i, ojp.node, r, ojp.length).contains(mjp)) continue;
    const int mirrored = dual_node(*sub, oj.node);
    if (!red_set(*sub, mirrored, ojp.node, oj.length, ojp.length).contains(mjp - mj + dual_coxeter(*sub))) {
      continue;
    }
    if (!(mj + oj.length <= mjp + ojp.length + distance(d, line.outer[0].node, line.outer[1].node))) {
      continue;
    }
    return j;
  }
  return std::nullopt;
}

/// Prime factorization for polynomials whose q-factorization graph has
/// exactly three vertices.
inline FactorizationResult three_vertex_prime_check(const DrinfeldPolynomial& p) {
  const auto g = q_fact_graph(p);
  if (g.size() != 3) {
    throw NotApplicable("q-factorization graph has " + std::to_string(g.size()) + " vertices, expected 3");
  }
  FactorizationResult r;
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    for (const auto& c : comps) r.factors.push_back(induced_subgraph(g, c).polynomial());
    r.status = RouteStatus::component_route;
  } else if (is_totally_ordered(g)) {
    r.factors = {p};
    r.status = RouteStatus::prime;
  } else {
    const auto line = as_alternating_line(g);
    if (!line) throw InvariantViolation("connected 3-vertex graph is neither ordered nor a line");
    if (const auto j = alternating_line_split(*line, p.diagram())) {
      auto split = kr_expand(p.diagram(), line->outer[*j]);
      auto rest = quotient(p, split);
      r.factors = {std::move(split), std::move(rest)};
      r.status = RouteStatus::three_vertex_route;
    } else {
      r.factors = {p};
      r.status = RouteStatus::prime;
    }
  }
  detail::require_product(p, r);
  return r;
}

/// Dispatches to whichever criterion covers `p`: snake support, components
/// of the q-factorization graph, total order, three vertices. Anything else
/// is reported as unknown with `p` as its single factor.
inline FactorizationResult prime_factorize_small(const DrinfeldPolynomial& p) {
  FactorizationResult r;
  if (p.is_one()) {
    r.status = RouteStatus::component_route;
    return r;
  }
  if (has_snake_support(p)) return prime_factorize_snake_support(p);

  const auto g = q_fact_graph(p);
  const auto comps = connected_components(g);
  if (comps.size() > 1) {
    r.status = RouteStatus::component_route;
    for (const auto& c : comps) {
      auto sub = prime_factorize_small(induced_subgraph(g, c).polynomial());
      if (sub.status == RouteStatus::unknown) r.status = RouteStatus::unknown;
      r.factors.insert(r.factors.end(), sub.factors.begin(), sub.factors.end());
    }
  } else if (is_totally_ordered(g)) {
    r.factors = {p};
    r.status = RouteStatus::prime;
  } else if (g.size() == 3) {
    r = three_vertex_prime_check(p);
  } else {
    r.factors = {p};
    r.status = RouteStatus::unknown;
  }
  detail::require_product(p, r);
  return r;
}

}  // namespace qfg
