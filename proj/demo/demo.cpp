// Walks one polynomial through the library: q-factorization, both graphs,
// mtos-quochains and the factorization route.

#include <iostream>

#include "qfg/decomp.hpp"
#include "qfg/text.hpp"

int main(int argc, char** argv) {
  using namespace qfg;
  const auto p = parse_polynomial(argc > 1 ? argv[1] : "A3; w[1,3]^2 w[2,0] w[3,9]");
  std::cout << "input      " << to_text(p) << "\n";

  std::cout << "q-factors ";
  for (const auto& k : q_factorization(p)) std::cout << " kr(" << k.node << "," << k.center << "," << k.length << ")";
  std::cout << "\n";

  const auto gf = fundamental_graph(p);
  std::cout << "G_f totally ordered: " << std::boolalpha << is_totally_ordered(gf)
            << ", components: " << connected_components(gf).size() << "\n";
  std::cout << to_dot(q_fact_graph(p));

  if (gf.size() <= 14) {
    std::cout << "mtos-quochains: " << all_mtos_quochains(gf).size()
              << ", unique up to isomorphism: " << unique_mtos_decomposition(gf) << "\n";
  }

  const auto result = prime_factorize_small(p);
  std::cout << "route " << to_string(result.status) << "\n";
  for (const auto& f : result.factors) std::cout << "  " << to_text(f) << "\n";
}
