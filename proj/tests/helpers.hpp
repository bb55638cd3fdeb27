#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "qfg/weights.hpp"

namespace qfg::test {

inline DrinfeldPolynomial poly(int n, std::initializer_list<std::pair<int, int>> ws) {
  DrinfeldPolynomial p{DynkinA(n)};
  for (const auto& [i, a] : ws) p.multiply({i, a});
  return p;
}

inline std::vector<FundamentalWeight> seq(std::initializer_list<std::pair<int, int>> ws) {
  std::vector<FundamentalWeight> out;
  for (const auto& [i, a] : ws) out.push_back({i, a});
  return out;
}

}  // namespace qfg::test
