#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfg/dynkin.hpp"

namespace qfg {

/// omega_{node, center}: the Drinfeld polynomial 1 - q^center u at `node`.
struct FundamentalWeight {
  int node = 1;
  int center = 0;

  friend constexpr auto operator<=>(const FundamentalWeight&, const FundamentalWeight&) = default;
};

/// omega_{node, center, length}: product of `length` fundamentals at `node`
/// whose centers form a step-2 progression centered at `center`.
struct KRFactor {
  int node = 1;
  int center = 0;
  int length = 1;

  constexpr int min_center() const noexcept { return center - length + 1; }
  constexpr int max_center() const noexcept { return center + length - 1; }
  constexpr bool is_fundamental() const noexcept { return length == 1; }

  friend constexpr auto operator<=>(const KRFactor&, const KRFactor&) = default;
};

inline void require_valid(const DynkinA& d, const KRFactor& k) {
  d.require_node(k.node);
  if (k.length < 1) throw std::invalid_argument("KR length must be positive");
}

/// Finite multiset of fundamental weights over a fixed type A diagram. The
/// empty multiset is the identity polynomial 1.
class DrinfeldPolynomial {
 public:
  explicit DrinfeldPolynomial(DynkinA diagram) : diagram_(diagram) {}

  DrinfeldPolynomial(DynkinA diagram, std::span<const FundamentalWeight> factors)
      : diagram_(diagram) {
    for (const auto& w : factors) multiply(w);
  }

  const DynkinA& diagram() const noexcept { return diagram_; }

  DrinfeldPolynomial& multiply(const FundamentalWeight& w, int multiplicity = 1) {
    diagram_.require_node(w.node);
    if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
    counts_[w] += multiplicity;
    return *this;
  }

  DrinfeldPolynomial& operator*=(const DrinfeldPolynomial& other) {
    require_same_diagram(other);
    for (const auto& [w, m] : other.counts_) counts_[w] += m;
    return *this;
  }

  friend DrinfeldPolynomial operator*(DrinfeldPolynomial a, const DrinfeldPolynomial& b) {
    a *= b;
    return a;
  }

  bool is_one() const noexcept { return counts_.empty(); }

  /// Number of fundamental factors counted with multiplicity.
  std::size_t degree() const noexcept {
    std::size_t total = 0;
    for (const auto& [w, m] : counts_) total += static_cast<std::size_t>(m);
    return total;
  }

  int multiplicity(const FundamentalWeight& w) const {
    auto it = counts_.find(w);
    return it == counts_.end() ? 0 : it->second;
  }

  /// (fundamental, multiplicity) pairs ordered by (node, center).
  const std::map<FundamentalWeight, int>& counts() const noexcept { return counts_; }

  /// Fundamental factors with repetition, ordered by (node, center).
  std::vector<FundamentalWeight> factors() const {
    std::vector<FundamentalWeight> out;
    out.reserve(degree());
    for (const auto& [w, m] : counts_) out.insert(out.end(), static_cast<std::size_t>(m), w);
    return out;
  }

  bool divides(const DrinfeldPolynomial& p) const {
    require_same_diagram(p);
    for (const auto& [w, m] : counts_) {
      if (p.multiplicity(w) < m) return false;
    }
    return true;
  }

  friend bool operator==(const DrinfeldPolynomial&, const DrinfeldPolynomial&) = default;
  friend auto operator<=>(const DrinfeldPolynomial& a, const DrinfeldPolynomial& b) {
    if (auto c = a.diagram_.rank() <=> b.diagram_.rank(); c != 0) return c;
    return a.counts_ <=> b.counts_;
  }

  void require_same_diagram(const DrinfeldPolynomial& other) const {
    if (!(diagram_ == other.diagram_)) throw std::invalid_argument("diagram mismatch");
  }

 private:
  DynkinA diagram_;
  std::map<FundamentalWeight, int> counts_;
};

inline DrinfeldPolynomial one(const DynkinA& d) { return DrinfeldPolynomial(d); }

inline DrinfeldPolynomial kr_expand(const DynkinA& d, const KRFactor& k) {
  require_valid(d, k);
  DrinfeldPolynomial p(d);
  for (int step = 0; step < k.length; ++step) {
    p.multiply({k.node, k.center + k.length - 1 - 2 * step});
  }
  return p;
}

inline DrinfeldPolynomial kr_expand(const DynkinA& d, std::span<const KRFactor> ks) {
  DrinfeldPolynomial p(d);
  for (const auto& k : ks) p *= kr_expand(d, k);
  return p;
}

/// One copy of each fundamental factor.
inline DrinfeldPolynomial bar(const DrinfeldPolynomial& p) {
  DrinfeldPolynomial out(p.diagram());
  for (const auto& [w, m] : p.counts()) out.multiply(w);
  return out;
}

/// omega_{i,a} -> omega_{i*, a - h}.
inline DrinfeldPolynomial dual(const DrinfeldPolynomial& p) {
  const auto& d = p.diagram();
  DrinfeldPolynomial out(d);
  for (const auto& [w, m] : p.counts()) {
    out.multiply({dual_node(d, w.node), w.center - dual_coxeter(d)}, m);
  }
  return out;
}

/// omega_{i,a} -> omega_{i*, a + h}; inverse of dual().
inline DrinfeldPolynomial codual(const DrinfeldPolynomial& p) {
  const auto& d = p.diagram();
  DrinfeldPolynomial out(d);
  for (const auto& [w, m] : p.counts()) {
    out.multiply({dual_node(d, w.node), w.center + dual_coxeter(d)}, m);
  }
  return out;
}

inline bool divides(const DrinfeldPolynomial& d, const DrinfeldPolynomial& p) { return d.divides(p); }

/// p / d as a multiset difference; d must divide p.
inline DrinfeldPolynomial quotient(const DrinfeldPolynomial& p, const DrinfeldPolynomial& d) {
  if (!d.divides(p)) throw std::invalid_argument("quotient by a non-divisor");
  DrinfeldPolynomial out(p.diagram());
  for (const auto& [w, m] : p.counts()) {
    const int left = m - d.multiplicity(w);
    if (left > 0) out.multiply(w, left);
  }
  return out;
}

inline std::set<int> support(const DrinfeldPolynomial& p) {
  std::set<int> nodes;
  for (const auto& [w, m] : p.counts()) nodes.insert(w.node);
  return nodes;
}

}  // namespace qfg
