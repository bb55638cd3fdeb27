#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qfg/decomp.hpp"
#include "qfg/errors.hpp"
#include "qfg/graph.hpp"
#include "qfg/qfactor.hpp"
#include "qfg/snake.hpp"
#include "qfg/text.hpp"
#include "qfg/oracle/oracle.hpp"
#include "qfg/oracle/properties.hpp"

namespace qfg::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kParseError = 2, kNotApplicable = 3, kInvariant = 4 };

inline json to_json(const KRFactor& k) { return {{"i", k.node}, {"a", k.center}, {"r", k.length}}; }
inline json to_json(const FundamentalWeight& w) { return {{"i", w.node}, {"a", w.center}}; }

inline json to_json(const DrinfeldPolynomial& p) {
  json out = json::array();
  for (const auto& w : p.factors()) out.push_back(to_json(w));
  return out;
}

inline json to_json(const PQGraph& g) {
  json vertices = json::array();
  for (std::size_t k = 0; k < g.size(); ++k) {
    auto v = to_json(g.label_at(k));
    v["id"] = g.id_at(k).value;
    vertices.push_back(v);
  }
  json arrows = json::array();
  for (const auto& [from, to] : g.arrows()) arrows.push_back({from.value, to.value});
  return {{"rank", g.diagram().rank()},
          {"vertices", vertices},
          {"arrows", arrows},
          {"totally_ordered", is_totally_ordered(g)},
          {"components", connected_components(g).size()}};
}

inline json ids_json(const std::vector<VertexId>& ids) {
  json out = json::array();
  for (auto v : ids) out.push_back(v.value);
  return out;
}

inline json to_json(const PQGraph& g, const Multicut& q) {
  json parts = json::array();
  json factors = json::array();
  for (const auto& part : q.parts) parts.push_back(ids_json(part));
  for (const auto& f : part_polynomials(g, q)) factors.push_back(to_json(f));
  return {{"parts", parts}, {"factors", factors}};
}

inline json to_json(const FactorizationResult& r) {
  json factors = json::array();
  for (const auto& f : r.factors) factors.push_back(to_json(f));
  return {{"status", std::string(to_string(r.status))}, {"factors", factors}};
}

inline PQGraph graph_of(const DrinfeldPolynomial& p, const std::string& kind) {
  return kind == "qfact" ? q_fact_graph(p) : fundamental_graph(p);
}

struct ScanBounds {
  int n = 3;
  int factors = 6;
  int center_min = -6;
  int center_max = 6;
  int samples = 200;
};

/// "n=3,factors=6,centers=-6:6,samples=200"; any subset of keys.
inline ScanBounds parse_bounds(const std::string& text) {
  ScanBounds b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in bounds", 0);
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    try {
      if (key == "n") {
        b.n = std::stoi(value);
      } else if (key == "factors") {
        b.factors = std::stoi(value);
      } else if (key == "samples") {
        b.samples = std::stoi(value);
      } else if (key == "centers") {
        const auto colon = value.find(':', 1);
        if (colon == std::string::npos) throw ParseError("centers must be lo:hi", eq + 1);
        b.center_min = std::stoi(value.substr(0, colon));
        b.center_max = std::stoi(value.substr(colon + 1));
      } else {
        throw ParseError("unknown bounds key '" + key + "'", 0);
      }
    } catch (const std::logic_error&) {
      throw ParseError("malformed bounds value '" + value + "'", eq + 1);
    }
  }
  if (b.n < 1 || b.factors < 1 || b.samples < 0 || b.center_min > b.center_max) {
    throw ParseError("bounds out of range", 0);
  }
  return b;
}

/// Property battery over seeded random polynomials.
inline json scan(const ScanBounds& bounds, std::uint64_t seed, bool snake_support_only) {
  json violations = json::array();
  json candidates = json::array();
  std::map<std::string, int> statuses;
  auto flag = [&](const DrinfeldPolynomial& p, const std::string& property, const std::string& detail) {
    violations.push_back({{"input", to_text(p)}, {"property", property}, {"detail", detail}});
  };

  for (int s = 0; s < bounds.samples; ++s) {
    const oracle::RandomBounds rb{bounds.n, bounds.factors, bounds.center_min, bounds.center_max,
                                  snake_support_only, 3};
    const auto p = oracle::random_drinfeld(seed * 1000003ULL + static_cast<std::uint64_t>(s), rb);
    const auto qf = q_factorization(p);
    if (!(kr_expand(p.diagram(), std::span<const KRFactor>(qf)) == p)) flag(p, "qfact-round-trip", "");
    try {
      if (oracle::brute_qfact(p, 5, seed + static_cast<std::uint64_t>(s)) != qf) {
        flag(p, "qfact-confluence", "oracle result differs");
      }
    } catch (const oracle::ConfluenceViolation& e) {
      flag(p, "qfact-confluence", e.what());
    }

    const auto gf = fundamental_graph(p);
    const auto gq = q_fact_graph(p);
    for (const auto* g : {&gf, &gq}) {
      if (auto v = oracle::arrow_determinism_violation(*g)) flag(p, "arrow-determinism", *v);
      if (auto v = oracle::any_path_bound_violation(*g)) flag(p, "path-bounds", *v);
      if (g->size() <= 16 && enumerate_mtos(*g) != oracle::brute_mtos(*g)) flag(p, "mtos-oracle", "");
    }
    if (auto v = oracle::divisibility_incomparability_violation(gq)) flag(p, "divisibility", *v);

    const auto result = prime_factorize_small(p);
    ++statuses[std::string(to_string(result.status))];
    const bool small = gf.size() <= 14;
    if (has_snake_support(p)) {
      for (const auto& f : result.factors) {
        if (!is_prime_snake(by_center(f), p.diagram()) || !has_snake_support(f)) {
          flag(p, "snake-factor-prime", to_text(f));
        }
      }
      if (small && !unique_mtos_decomposition(gf)) flag(p, "mtos-uniqueness", "");
      auto greedy = part_polynomials(gf, mtos_quochain(gf));
      auto route = result.factors;
      std::sort(greedy.begin(), greedy.end());
      std::sort(route.begin(), route.end());
      if (greedy != route) flag(p, "mtos-factorization", "greedy quochain factors differ");
    }
    if (support(p).size() == 1) {
      if (!monochromatic_equivalence_report(p).consistent()) flag(p, "monochromatic-equivalence", "");
      if (result.status == RouteStatus::unknown) flag(p, "monochromatic-coverage", "");
    }
    if (result.status == RouteStatus::unknown && small && unique_mtos_decomposition(gf)) {
      candidates.push_back(to_text(p));
    }
  }
  return {{"checked", bounds.samples},
          {"seed", seed},
          {"violations", violations},
          {"statuses", statuses},
          {"unique_mtos_but_unknown", candidates}};
}

/// Runs one subcommand; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"q-factorization graphs, snakes, and prime factorization in type A"};
  app.require_subcommand(1);

  std::string poly_text;
  std::string kind = "fund";
  bool dot = false;
  bool all = false;
  std::uint32_t fuse_v = 0;
  std::uint32_t fuse_w = 0;
  std::string bounds_text;
  std::uint64_t seed = 1;
  bool snake_only = false;

  auto add_poly = [&](CLI::App* sub) { sub->add_option("polynomial", poly_text, "e.g. \"A3; w[1,3] w[2,0]\"")->required(); };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "fund or qfact")->check(CLI::IsMember({"fund", "qfact"}));
  };

  auto* qfact_cmd = app.add_subcommand("qfact", "q-factorization as a list of KR factors");
  add_poly(qfact_cmd);
  auto* graph_cmd = app.add_subcommand("graph", "fundamental or q-factorization graph");
  add_poly(graph_cmd);
  add_kind(graph_cmd);
  graph_cmd->add_flag("--dot", dot, "emit Graphviz instead of JSON");
  auto* ps_cmd = app.add_subcommand("is-prime-snake", "whether the factors, ordered by center, form a (prime) snake");
  add_poly(ps_cmd);
  auto* ss_cmd = app.add_subcommand("snake-support", "whether the radical is a prime snake");
  add_poly(ss_cmd);
  auto* mtos_cmd = app.add_subcommand("mtos", "maximal totally ordered vertex sets");
  add_poly(mtos_cmd);
  add_kind(mtos_cmd);
  auto* quo_cmd = app.add_subcommand("quochains", "greedy or exhaustive mtos-quochains");
  add_poly(quo_cmd);
  add_kind(quo_cmd);
  quo_cmd->add_flag("--all", all, "enumerate every mtos-quochain");
  auto* fac_cmd = app.add_subcommand("factorize", "prime factorization where a criterion applies");
  add_poly(fac_cmd);
  auto* fuse_cmd = app.add_subcommand("fuse", "fuse two vertices in special position");
  add_poly(fuse_cmd);
  fuse_cmd->add_option("v", fuse_v, "vertex id")->required();
  fuse_cmd->add_option("w", fuse_w, "vertex id")->required();
  add_kind(fuse_cmd);
  fuse_cmd->add_flag("--dot", dot, "emit Graphviz instead of JSON");
  auto* c3_cmd = app.add_subcommand("check3", "three-vertex primality criterion");
  add_poly(c3_cmd);
  auto* scan_cmd = app.add_subcommand("scan", "property battery over random polynomials");
  scan_cmd->add_option("--bounds", bounds_text, "n=3,factors=6,centers=-6:6,samples=200");
  scan_cmd->add_option("--seed", seed, "generator seed");
  scan_cmd->add_flag("--snake-support-only", snake_only, "sample only polynomials with snake support");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  try {
    if (scan_cmd->parsed()) {
      const auto report = scan(parse_bounds(bounds_text), seed, snake_only);
      out << report.dump(2) << "\n";
      return report["violations"].empty() ? kOk : kInvariant;
    }

    const auto p = parse_polynomial(poly_text);
    json result;
    if (qfact_cmd->parsed()) {
      result = json::array();
      for (const auto& k : q_factorization(p)) result.push_back(to_json(k));
    } else if (graph_cmd->parsed()) {
      const auto g = graph_of(p, kind);
      if (dot) {
        out << to_dot(g);
        return kOk;
      }
      result = to_json(g);
    } else if (ps_cmd->parsed()) {
      const auto seq = by_center(p);
      result = {{"sequence", to_json(p)},
                {"snake", is_snake(seq, p.diagram())},
                {"prime_snake", is_prime_snake(seq, p.diagram())}};
      result["sequence"] = json::array();
      for (const auto& w : seq) result["sequence"].push_back(to_json(w));
    } else if (ss_cmd->parsed()) {
      result = {{"snake_support", has_snake_support(p)}, {"radical", to_json(bar(p))}};
    } else if (mtos_cmd->parsed()) {
      const auto g = graph_of(p, kind);
      json sets = json::array();
      for (const auto& s : enumerate_mtos(g)) sets.push_back(ids_json(s));
      result = {{"graph", to_json(g)}, {"mtos", sets}};
    } else if (quo_cmd->parsed()) {
      const auto g = graph_of(p, kind);
      std::vector<Multicut> chains = all ? all_mtos_quochains(g) : std::vector<Multicut>{mtos_quochain(g)};
      json list = json::array();
      bool iso = true;
      for (const auto& q : chains) {
        if (!is_mtos_quochain(g, q)) throw InvariantViolation("emitted quochain is not an mtos-quochain");
        list.push_back(to_json(g, q));
        iso = iso && quochains_isomorphic(q, chains.front(), g);
      }
      result = {{"quochains", list}, {"count", chains.size()}, {"pairwise_isomorphic", iso}};
    } else if (fac_cmd->parsed()) {
      result = to_json(prime_factorize_small(p));
    } else if (fuse_cmd->parsed()) {
      const auto g = graph_of(p, kind);
      const auto fused = fuse_vertices(g, VertexId{fuse_v}, VertexId{fuse_w});
      if (!(fused.polynomial() == p)) throw InvariantViolation("fusion changed the polynomial");
      if (dot) {
        out << to_dot(fused);
        return kOk;
      }
      result = to_json(fused);
    } else if (c3_cmd->parsed()) {
      result = to_json(three_vertex_prime_check(p));
    }
    out << result.dump() << "\n";
    return kOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotApplicable& e) {
    err << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const oracle::ConfluenceViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    err << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const std::out_of_range& e) {
    err << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const std::length_error& e) {
    err << "not applicable: " << e.what() << "\n";
    return kNotApplicable;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvariant;
  }
}

}  // namespace qfg::cli
