#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfg/qfactor.hpp"
#include "qfg/reducibility.hpp"
#include "qfg/weights.hpp"

namespace qfg {

/// Stable vertex identifier; creation-ordered and never reused within a
/// derivation chain.
struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

using Arrow = std::pair<VertexId, VertexId>;

/// Pseudo q-factorization graph. Arrows are a function of the labels:
/// (v, w) is an arrow iff center(v) - center(w) lies in the reducibility set
/// of the two labels. Vertices are kept sorted by id.
class PQGraph {
 public:
  static PQGraph build(const DynkinA& d, std::span<const KRFactor> labels) {
    std::vector<VertexId> ids(labels.size());
    for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = VertexId{static_cast<std::uint32_t>(k)};
    return PQGraph(d, std::move(ids), {labels.begin(), labels.end()},
                   static_cast<std::uint32_t>(labels.size()));
  }

  const DynkinA& diagram() const noexcept { return diagram_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  VertexId next_id() const noexcept { return VertexId{next_id_}; }

  bool contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

  std::size_t index_of(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) {
      throw std::out_of_range("unknown vertex id " + std::to_string(v.value));
    }
    return static_cast<std::size_t>(it - ids_.begin());
  }

  VertexId id_at(std::size_t k) const { return ids_.at(k); }
  const KRFactor& label_at(std::size_t k) const { return labels_.at(k); }
  const KRFactor& label(VertexId v) const { return labels_[index_of(v)]; }

  bool arrow_at(std::size_t from, std::size_t to) const { return adjacency_[from * size() + to]; }
  bool has_arrow(VertexId from, VertexId to) const { return arrow_at(index_of(from), index_of(to)); }

  const std::vector<std::size_t>& successors(std::size_t k) const { return out_.at(k); }
  const std::vector<std::size_t>& predecessors(std::size_t k) const { return in_.at(k); }

  std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    for (std::size_t a = 0; a < size(); ++a) {
      for (auto b : out_[a]) out.emplace_back(ids_[a], ids_[b]);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Label multiset, sorted.
  std::vector<KRFactor> labels() const {
    auto out = labels_;
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Labels in vertex-id order.
  const std::vector<KRFactor>& labels_by_id() const noexcept { return labels_; }

  DrinfeldPolynomial polynomial() const { return kr_expand(diagram_, std::span<const KRFactor>(labels_)); }

  /// Derived graph with the same id space; arrows are recomputed from labels.
  PQGraph with(std::vector<VertexId> ids, std::vector<KRFactor> labels,
               std::uint32_t next_id) const {
    return PQGraph(diagram_, std::move(ids), std::move(labels), next_id);
  }

 private:
  PQGraph(DynkinA d, std::vector<VertexId> ids, std::vector<KRFactor> labels, std::uint32_t next_id)
      : diagram_(d), ids_(std::move(ids)), labels_(std::move(labels)), next_id_(next_id) {
    if (ids_.size() != labels_.size()) throw std::invalid_argument("id/label count mismatch");
    std::vector<std::size_t> order(ids_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids_[a] < ids_[b]; });
    std::vector<VertexId> sorted_ids;
    std::vector<KRFactor> sorted_labels;
    for (auto k : order) {
      if (!sorted_ids.empty() && sorted_ids.back() == ids_[k]) {
        throw std::invalid_argument("duplicate vertex id");
      }
      require_valid(diagram_, labels_[k]);
      sorted_ids.push_back(ids_[k]);
      sorted_labels.push_back(labels_[k]);
    }
    ids_ = std::move(sorted_ids);
    labels_ = std::move(sorted_labels);

    const auto n = ids_.size();
    adjacency_.assign(n * n, false);
    out_.assign(n, {});
    in_.assign(n, {});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && qfg::has_arrow(labels_[a], labels_[b], diagram_)) {
          adjacency_[a * n + b] = true;
          out_[a].push_back(b);
          in_[b].push_back(a);
        }
      }
    }
  }

  DynkinA diagram_;
  std::vector<VertexId> ids_;
  std::vector<KRFactor> labels_;
  std::uint32_t next_id_ = 0;
  std::vector<bool> adjacency_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

inline PQGraph build_graph(const DynkinA& d, std::span<const KRFactor> labels) {
  return PQGraph::build(d, labels);
}

inline PQGraph fundamental_graph(const DrinfeldPolynomial& p) {
  std::vector<KRFactor> labels;
  for (const auto& w : p.factors()) labels.push_back({w.node, w.center, 1});
  return PQGraph::build(p.diagram(), labels);
}

inline PQGraph q_fact_graph(const DrinfeldPolynomial& p) {
  const auto labels = q_factorization(p);
  return PQGraph::build(p.diagram(), labels);
}

/// Disjoint union over the product polynomial; ids of `h` are shifted past
/// those of `g`.
inline PQGraph tensor(const PQGraph& g, const PQGraph& h) {
  if (!(g.diagram() == h.diagram())) throw std::invalid_argument("diagram mismatch");
  auto ids = g.ids();
  auto labels = g.labels_by_id();
  const auto shift = g.next_id().value;
  for (std::size_t k = 0; k < h.size(); ++k) {
    ids.push_back(VertexId{h.id_at(k).value + shift});
    labels.push_back(h.label_at(k));
  }
  return g.with(std::move(ids), std::move(labels), shift + h.next_id().value);
}

/// Strict partial order generated by the arrows: w < v iff there is a
/// directed path v -> ... -> w.
class ReachabilityOrder {
 public:
  explicit ReachabilityOrder(const PQGraph& g) : ids_(g.ids()), n_(g.size()), below_(n_ * n_, false) {
    // Arrows strictly decrease centers, so ascending center order is a
    // reverse topological order.
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return g.label_at(a).center < g.label_at(b).center; });
    for (auto v : order) {
      for (auto w : g.successors(v)) {
        below_[v * n_ + w] = true;
        for (std::size_t x = 0; x < n_; ++x) {
          if (below_[w * n_ + x]) below_[v * n_ + x] = true;
        }
      }
    }
  }

  bool less_at(std::size_t w, std::size_t v) const { return below_[v * n_ + w]; }
  bool comparable_at(std::size_t a, std::size_t b) const { return less_at(a, b) || less_at(b, a); }

  bool less(VertexId w, VertexId v) const { return less_at(index(w), index(v)); }
  bool comparable(VertexId a, VertexId b) const { return comparable_at(index(a), index(b)); }

  /// All pairs (w, v) with w < v.
  std::vector<std::pair<VertexId, VertexId>> relation() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (std::size_t w = 0; w < n_; ++w) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (less_at(w, v)) out.emplace_back(ids_[w], ids_[v]);
      }
    }
    return out;
  }

  std::size_t comparable_pairs() const {
    std::size_t count = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (comparable_at(a, b)) ++count;
      }
    }
    return count;
  }

 private:
  std::size_t index(VertexId v) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) throw std::out_of_range("unknown vertex id");
    return static_cast<std::size_t>(it - ids_.begin());
  }

  std::vector<VertexId> ids_;
  std::size_t n_;
  std::vector<bool> below_;
};

inline ReachabilityOrder reachability_order(const PQGraph& g) { return ReachabilityOrder(g); }

inline bool is_totally_ordered(const PQGraph& g) {
  const auto n = g.size();
  return ReachabilityOrder(g).comparable_pairs() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// Weakly connected components, each sorted by id, listed by smallest id.
inline std::vector<std::vector<VertexId>> connected_components(const PQGraph& g) {
  const auto n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : g.successors(a)) parent[find(a)] = find(b);
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto root = find(a);
    if (slot[root] == n) {
      slot[root] = out.size();
      out.emplace_back();
    }
    out[slot[root]].push_back(g.id_at(a));
  }
  return out;
}

inline PQGraph induced_subgraph(const PQGraph& g, std::span<const VertexId> keep) {
  std::vector<VertexId> ids;
  std::vector<KRFactor> labels;
  for (auto v : keep) {
    labels.push_back(g.label(v));
    ids.push_back(v);
  }
  return g.with(std::move(ids), std::move(labels), g.next_id().value);
}

/// Vertices of `g` not in `drop`.
inline std::vector<VertexId> complement(const PQGraph& g, std::span<const VertexId> drop) {
  std::vector<VertexId> sorted(drop.begin(), drop.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexId> out;
  std::set_difference(g.ids().begin(), g.ids().end(), sorted.begin(), sorted.end(),
                      std::back_inserter(out));
  return out;
}

/// Since arrows are determined by labels, a label-preserving bijection is
/// automatically an isomorphism.
inline bool is_isomorphic(const PQGraph& g, const PQGraph& h) {
  return g.diagram() == h.diagram() && g.labels() == h.labels();
}

/// Fuse the labels of v and w (which must be in special position). A pure
/// fusion removes w; otherwise v carries the union and w the intersection.
inline PQGraph fuse_vertices(const PQGraph& g, VertexId v, VertexId w) {
  if (v == w) throw std::invalid_argument("cannot fuse a vertex with itself");
  const auto f = fuse(g.label(v), g.label(w));
  std::vector<VertexId> ids;
  std::vector<KRFactor> labels;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const auto id = g.id_at(k);
    if (id == v) {
      ids.push_back(id);
      labels.push_back(f.big);
    } else if (id == w) {
      if (f.small) {
        ids.push_back(id);
        labels.push_back(*f.small);
      }
    } else {
      ids.push_back(id);
      labels.push_back(g.label_at(k));
    }
  }
  return g.with(std::move(ids), std::move(labels), g.next_id().value);
}

inline std::string vertex_label(const KRFactor& k, VertexId id) {
  std::ostringstream os;
  os << "kr(" << k.node << ',' << k.center << ',' << k.length << ")#" << id.value;
  return os.str();
}

/// Graphviz rendering; vertices in id order, arrows sorted.
inline std::string to_dot(const PQGraph& g) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    os << "  v" << g.id_at(k).value << " [label=\"" << vertex_label(g.label_at(k), g.id_at(k))
       << "\"];\n";
  }
  for (const auto& [from, to] : g.arrows()) {
    os << "  v" << from.value << " -> v" << to.value << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qfg
