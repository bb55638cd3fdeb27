#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "qfg/graph.hpp"
#include "qfg/reducibility.hpp"
#include "qfg/weights.hpp"

namespace qfg {

/// a2 - a1 in d(i1,i2) + 2Z_{>0}.
inline bool in_snake_position(const FundamentalWeight& p1, const FundamentalWeight& p2, const DynkinA& d) {
  const int gap = p2.center - p1.center;
  const int dist = distance(d, p1.node, p2.node);
  return gap > dist && (gap - dist) % 2 == 0;
}

inline bool in_prime_snake_position(const FundamentalWeight& p1, const FundamentalWeight& p2,
                                    const DynkinA& d) {
  return red_set(d, p1.node, p2.node, 1, 1).contains(p2.center - p1.center);
}

inline bool is_snake(std::span<const FundamentalWeight> seq, const DynkinA& d) {
  for (std::size_t k = 0; k < seq.size(); ++k) d.require_node(seq[k].node);
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!in_snake_position(seq[k], seq[k + 1], d)) return false;
  }
  return true;
}

inline bool is_prime_snake(std::span<const FundamentalWeight> seq, const DynkinA& d) {
  for (std::size_t k = 0; k < seq.size(); ++k) d.require_node(seq[k].node);
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (!in_prime_snake_position(seq[k], seq[k + 1], d)) return false;
  }
  return true;
}

/// A sequence of (node, center) pairs validated as a snake on construction.
class Snake {
 public:
  Snake(DynkinA d, std::vector<FundamentalWeight> entries) : diagram_(d), entries_(std::move(entries)) {
    if (!is_snake(entries_, diagram_)) throw std::invalid_argument("sequence is not a snake");
  }

  const DynkinA& diagram() const noexcept { return diagram_; }
  const std::vector<FundamentalWeight>& entries() const noexcept { return entries_; }
  bool is_prime() const { return is_prime_snake(entries_, diagram_); }
  DrinfeldPolynomial polynomial() const { return DrinfeldPolynomial(diagram_, entries_); }

 private:
  DynkinA diagram_;
  std::vector<FundamentalWeight> entries_;
};

/// Fundamental factors with repetition ordered by (center, node).
inline std::vector<FundamentalWeight> by_center(const DrinfeldPolynomial& p) {
  auto f = p.factors();
  std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) {
    return x.center != y.center ? x.center < y.center : x.node < y.node;
  });
  return f;
}

/// Whether the radical of `p` is a prime snake polynomial. Center ties are
/// rejected outright: a snake needs strictly increasing centers. The
/// identity polynomial has no snake support.
inline bool has_snake_support(const DrinfeldPolynomial& p) {
  if (p.is_one()) return false;
  const auto seq = by_center(bar(p));
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (seq[k].center == seq[k + 1].center) return false;
  }
  return is_prime_snake(seq, p.diagram());
}

/// Consecutive differences of `k` all lie in R_{i,i}.
inline bool segment_check(int i, std::span<const int> k, const DynkinA& d) {
  const auto allowed = red_set(d, i, i, 1, 1);
  for (std::size_t s = 0; s + 1 < k.size(); ++s) {
    if (!allowed.contains(k[s + 1] - k[s])) return false;
  }
  return true;
}

/// Product of omega_{i, a + k_s}.
inline DrinfeldPolynomial segment_poly(const DynkinA& d, int i, std::span<const int> k, int a) {
  DrinfeldPolynomial p(d);
  for (int ks : k) p.multiply({i, a + ks});
  return p;
}

/// An (i,n)-segment anchored at a base center.
struct Segment {
  int node = 1;
  std::vector<int> offsets;
  int base = 0;

  bool valid(const DynkinA& d) const { return segment_check(node, offsets, d); }
  DrinfeldPolynomial polynomial(const DynkinA& d) const { return segment_poly(d, node, offsets, base); }
};

struct MonochromaticReport {
  bool segment_form = false;
  bool prime_snake = false;
  bool fundamental_graph_totally_ordered = false;
  bool qfact_graph_totally_ordered = false;

  bool consistent() const {
    return segment_form == prime_snake && prime_snake == fundamental_graph_totally_ordered &&
           fundamental_graph_totally_ordered == qfact_graph_totally_ordered;
  }
};

/// Evaluates four characterizations of primality for a polynomial supported
/// on a single node, each by its own route.
inline MonochromaticReport monochromatic_equivalence_report(const DrinfeldPolynomial& p) {
  const auto nodes = support(p);
  if (nodes.size() != 1) throw std::invalid_argument("polynomial is not supported on a single node");
  const int i = *nodes.begin();
  const auto& d = p.diagram();

  MonochromaticReport r;

  // Segment form: offsets from the smallest center.
  std::vector<int> centers;
  for (const auto& w : p.factors()) centers.push_back(w.center);
  std::sort(centers.begin(), centers.end());
  std::vector<int> offsets;
  for (int c : centers) offsets.push_back(c - centers.front());
  r.segment_form = segment_check(i, offsets, d) &&
                   segment_poly(d, i, offsets, centers.front()) == p;

  r.prime_snake = is_prime_snake(by_center(p), d);
  r.fundamental_graph_totally_ordered = is_totally_ordered(fundamental_graph(p));
  r.qfact_graph_totally_ordered = is_totally_ordered(q_fact_graph(p));
  return r;
}

}  // namespace qfg
