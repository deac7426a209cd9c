#include "revlex/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <thread>

#include "revlex/bounds.hpp"
#include "revlex/expansion.hpp"
#include "revlex/facets.hpp"
#include "revlex/graph.hpp"
#include "revlex/oracle.hpp"
#include "revlex/polytope.hpp"

namespace revlex::verify {

namespace {

using Failure = std::optional<std::string>;

// Runs check(i) for i in [0, count) on worker threads; the reported failure is the
// one with the smallest index, so results do not depend on scheduling.
CheckResult run_cases(std::string name, std::size_t count,
                      const std::function<Failure(std::size_t)>& check) {
  CheckResult result;
  result.name = std::move(name);
  result.cases = count;
  std::vector<Failure> failures(count);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            failures[i] = check(i);
          } catch (const std::exception& e) {
            failures[i] = std::string("exception: ") + e.what();
          }
        }
      });
    }
  }
  for (auto& failure : failures) {
    if (failure) {
      result.ok = false;
      result.failure = std::move(*failure);
      break;
    }
  }
  return result;
}

std::string at(Vertex n) { return "n=" + std::to_string(n) + ": "; }
std::string at(int d, Vertex n) { return "d=" + std::to_string(d) + " n=" + std::to_string(n) + ": "; }

struct Instance {
  int d;
  Vertex n;
};

// (d, n) for every full-dimensional P(n) in R^d.
std::vector<Instance> full_dimensional(int d_min, int d_max) {
  std::vector<Instance> out;
  for (int d = d_min; d <= d_max; ++d) {
    for (Vertex n = pow2(d - 1) + 1; n <= pow2(d); ++n) out.push_back({d, n});
  }
  return out;
}

std::vector<Instance> admissible(int d_min, int d_max) {
  std::vector<Instance> out;
  for (int d = d_min; d <= d_max; ++d) {
    for (Vertex n = static_cast<Vertex>(d) + 1; n <= pow2(d); ++n) out.push_back({d, n});
  }
  return out;
}

bool connected(const PolytopeGraph& graph) {
  if (graph.n() == 0) return true;
  std::vector<bool> seen(graph.n(), false);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = true;
  Vertex reached = 1;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (const Vertex y : graph.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        queue.push(y);
      }
    }
  }
  return reached == graph.n();
}

Rational objective(std::span<const Rational> c, Vertex x) {
  Rational value = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if ((x >> i) & 1U) value += c[i];
  }
  return value;
}

}  // namespace

CheckResult facets_vs_oracle(int d_min, int d_max) {
  const auto cases = full_dimensional(d_min, std::min(d_max, 6));
  return run_cases("facets-vs-oracle", cases.size(), [&](std::size_t i) -> Failure {
    const auto [d, n] = cases[i];
    const auto polytope = RevlexPolytope::from_count(n, d);
    const auto rows = full_description(polytope);

    std::vector<LinearInequality> facet_rows;
    for (const auto& row : rows) {
      switch (oracle::is_facet_by_rank(polytope, row)) {
        case oracle::FacetStatus::NotValid:
          return at(d, n) + row.tag.to_string() + " is not valid";
        case oracle::FacetStatus::Facet:
          facet_rows.push_back(row);
          break;
        case oracle::FacetStatus::ValidNotFacet:
          break;
      }
    }
    if (static_cast<std::int64_t>(facet_rows.size()) != facet_count(polytope)) {
      return at(d, n) + "facet_count " + std::to_string(facet_count(polytope)) + ", oracle " +
             std::to_string(facet_rows.size());
    }
    if (minimal_description(polytope) != facet_rows) {
      return at(d, n) + "minimal description differs from the facet rows";
    }

    std::set<oracle::RationalPoint> expected;
    for (Vertex x = 0; x < n; ++x) {
      oracle::RationalPoint point;
      for (int k = 0; k < d; ++k) point.emplace_back(static_cast<long>((x >> k) & 1U));
      expected.insert(std::move(point));
    }
    if (oracle::h_vertex_enumeration(rows, d) != expected) {
      return at(d, n) + "vertices of the full description differ from the vertex set";
    }
    return std::nullopt;
  });
}

CheckResult facet_bounds(int d_min, int d_max) {
  const auto cases = full_dimensional(d_min, d_max);
  return run_cases("facet-bounds", cases.size(), [&](std::size_t i) -> Failure {
    const auto [d, n] = cases[i];
    const auto polytope = RevlexPolytope::from_count(n, d);
    const auto f = facet_count(polytope);
    if (f < 2 * d - 1 || f > 3 * d - 2) return at(d, n) + std::to_string(f) + " facets";
    const bool weight_two = !polytope.is_cube() && polytope.weight() == 2;
    if ((f == 2 * d - 1) != weight_two) {
      return at(d, n) + "minimum 2d-1 not matched to weight two (" + std::to_string(f) + ")";
    }
    const bool extremal = n == pow2(d - 1) + pow2(d - 2) + 1;
    if ((f == 3 * d - 2) != extremal) {
      return at(d, n) + "maximum 3d-2 attained at the wrong n (" + std::to_string(f) + ")";
    }
    return std::nullopt;
  });
}

CheckResult graph_vs_oracle(Vertex n_max) {
  return run_cases("graph-vs-oracle", n_max, [&](std::size_t i) -> Failure {
    const Vertex n = i + 1;
    const auto polytope = RevlexPolytope::from_count(n);
    const auto graph = build_graph(polytope);
    if (!(graph == oracle::FaceOracle(polytope).graph())) {
      return at(n) + "graph differs from the smallest-face oracle";
    }
    for (Vertex x = 0; x < n; ++x) {
      const auto expected = graph.neighbors(x);
      const auto local = neighbors(polytope, x);
      if (!std::equal(local.begin(), local.end(), expected.begin(), expected.end())) {
        return at(n) + "neighbors(" + std::to_string(x) + ") differs from the graph";
      }
    }
    if (!connected(graph)) return at(n) + "graph is not connected";
    return std::nullopt;
  });
}

CheckResult edge_formula(Vertex n_max) {
  return run_cases("edge-formula", n_max, [&](std::size_t i) -> Failure {
    const Vertex n = i + 1;
    const auto polytope = RevlexPolytope::from_count(n);
    const BigInt counted(static_cast<unsigned long>(build_graph(polytope).edge_count()));
    const BigInt formula = edge_count_formula(polytope);
    if (counted != formula) return at(n) + "formula " + formula.get_str() + ", counted " + counted.get_str();
    return std::nullopt;
  });
}

CheckResult average_degree_bound(Vertex n_max) {
  return run_cases("average-degree", n_max, [&](std::size_t i) -> Failure {
    const Vertex n = i + 1;
    const auto polytope = RevlexPolytope::from_count(n);
    Rational avg(2 * build_graph(polytope).edge_count(), static_cast<unsigned long>(n));
    avg.canonicalize();
    if (avg > polytope.dim() + 4) return at(n) + "average degree " + to_string(avg);
    if (avg != average_degree(polytope)) return at(n) + "average_degree() disagrees with the graph";
    return std::nullopt;
  });
}

CheckResult optimization(Vertex n_max, int samples, std::uint64_t seed) {
  return run_cases("optimization", n_max, [&](std::size_t i) -> Failure {
    const Vertex n = i + 1;
    const auto polytope = RevlexPolytope::from_count(n);
    std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<unsigned long> den(1, 6);
    std::vector<Rational> c(static_cast<std::size_t>(polytope.d()));
    for (int s = 0; s < samples; ++s) {
      for (auto& ci : c) {
        ci = Rational(num(rng), den(rng));
        ci.canonicalize();
      }
      const auto best = maximize(polytope, c);
      const auto brute = oracle::brute_max(polytope, c);
      if (best.value != brute) {
        return at(n) + "maximize " + to_string(best.value) + ", brute force " + to_string(brute);
      }
      const Vertex arg = best.argmax.bits();
      if (arg >= n || objective(c, arg) != best.value) return at(n) + "argmax does not attain the value";
    }
    return std::nullopt;
  });
}

CheckResult flow_certificates(Vertex n_max) {
  const std::size_t count = n_max >= 2 ? n_max - 1 : 0;
  return run_cases("flow-certificates", count, [&](std::size_t i) -> Failure {
    const Vertex n = i + 2;
    const auto flow = build_mcf(n);
    const auto graph = build_graph(RevlexPolytope::from_count(n));
    for (const auto& [arc, value] : flow.arcs()) {
      if (sgn(value) < 0) return at(n) + "negative flow";
    }
    if (!illegal_support(flow, graph).empty()) return at(n) + "flow uses a non-edge";
    for (const auto& net : flow.divergence()) {
      if (sgn(net) != 0) return at(n) + "flow is not balanced";
    }
    Rational half(static_cast<unsigned long>(n), 2UL);
    half.canonicalize();
    if (flow.phi_max() > half) return at(n) + "phi_max " + to_string(flow.phi_max()) + " > n/2";
    if (flow.phi_max() != phi_max_recurrence(n)) return at(n) + "phi_max differs from the recurrence";
    if (certify_expansion(n, false).lower_bound < 1) return at(n) + "certified bound below 1";
    return std::nullopt;
  });
}

CheckResult pair_flow_audit(Vertex n_max) {
  CheckResult result;
  result.name = "pair-flow-audit";
  PairFlowOracle oracle;
  for (Vertex n = 2; n <= std::min(n_max, kAuditCap); ++n) {
    ++result.cases;
    const auto report = audit_pair_flows(n, &oracle);
    if (!report.ok) {
      result.ok = false;
      result.failure = at(n) + report.failure;
      break;
    }
  }
  return result;
}

CheckResult brute_expansion_bound(Vertex n_max) {
  const std::size_t count = n_max >= 2 ? std::min<Vertex>(n_max, 22) - 1 : 0;
  return run_cases("brute-expansion", count, [&](std::size_t i) -> Failure {
    const Vertex n = i + 2;
    const auto graph = build_graph(RevlexPolytope::from_count(n));
    const auto exact = oracle::brute_expansion(graph);
    const auto bound = certify_expansion(n, false).lower_bound;
    if (exact.value < 1) return at(n) + "expansion " + to_string(exact.value) + " < 1";
    if (exact.value < bound) return at(n) + "expansion below the certified bound";
    const auto size = exact.witness.size();
    if (size == 0 || 2 * size > n) return at(n) + "witness has the wrong size";
    Rational ratio(static_cast<unsigned long>(oracle::cut_size(graph, exact.witness)),
                   static_cast<unsigned long>(size));
    ratio.canonicalize();
    if (ratio != exact.value) return at(n) + "witness does not realize the minimum";
    return std::nullopt;
  });
}

CheckResult cube_expansion(int d_max) {
  const auto top = static_cast<std::size_t>(std::clamp(d_max, 0, 4));
  return run_cases("cube-expansion", top, [&](std::size_t i) -> Failure {
    const int d = static_cast<int>(i) + 1;
    const auto graph = build_graph(RevlexPolytope::from_count(pow2(d)));
    const auto exact = oracle::brute_expansion(graph).value;
    if (exact != 1) return "d=" + std::to_string(d) + ": cube expansion " + to_string(exact);
    return std::nullopt;
  });
}

CheckResult recursion_structure(Vertex n_max) {
  const std::size_t count = n_max >= 2 ? n_max - 1 : 0;
  return run_cases("recursion-structure", count, [&](std::size_t i) -> Failure {
    const Vertex n = i + 2;
    if (!halving_is_isomorphism(n)) return at(n) + "halving map is not an isomorphism";
    if (n % 2 == 1 && !partial_prism_embeds(n)) return at(n) + "partial prism map loses an edge";
    return std::nullopt;
  });
}

CheckResult pyramid_bounds(int d, Vertex cert_max) {
  const auto cases = admissible(d, d);
  return run_cases("pyramid-bounds(d=" + std::to_string(d) + ")", cases.size(),
                   [&](std::size_t i) -> Failure {
    const Vertex n = cases[i].n;
    const auto f = pyramid_facet_count(d, n);
    if (f > 3 * d) return at(d, n) + std::to_string(f) + " facets > 3d";
    if (!within_log_facet_bound(f, d, n, 2)) return at(d, n) + std::to_string(f) + " facets > d + 2 log2 n + 2";
    const auto avg = pyramid_average_degree(d, n);
    if (avg > d + 4) return at(d, n) + "average degree " + to_string(avg);
    if (n <= cert_max) {
      FlowBuilder builder;
      const auto cert = pyramid_expansion_certificate(d, n, builder);
      if (cert.lower_bound < 1) return at(d, n) + "certified bound " + to_string(cert.lower_bound);
      const auto flow = build_pyramid_mcf(d, n, builder);
      if (flow.phi_max() != cert.phi_max) return at(d, n) + "certificate phi_max differs from the flow";
      if (!illegal_support(flow, build_pyramid_graph(d, n)).empty()) return at(d, n) + "flow uses a non-edge";
    }
    return std::nullopt;
  });
}

CheckResult pyramid_vs_oracle(int d_max) {
  const auto cases = admissible(1, std::min(d_max, 5));
  return run_cases("pyramid-vs-oracle", cases.size(), [&](std::size_t i) -> Failure {
    const auto [d, n] = cases[i];
    const PyramidPolytope pyramid(d, n);
    const auto points = pyramid.embedding();
    const auto facets = oracle::brute_facets(points);
    if (static_cast<std::int64_t>(facets.size()) != pyramid_facet_count(d, n)) {
      return at(d, n) + "facet count " + std::to_string(pyramid_facet_count(d, n)) + ", oracle " +
             std::to_string(facets.size());
    }
    const auto graph = oracle::graph_from_facets(points, facets);
    if (!(graph == build_pyramid_graph(d, n))) return at(d, n) + "graph differs from the oracle";
    if (BigInt(static_cast<unsigned long>(graph.edge_count())) != pyramid_edge_count(d, n)) {
      return at(d, n) + "edge count differs from the oracle";
    }
    return std::nullopt;
  });
}

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  const int max_d = options.max_d;
  check_dimension(max_d);
  const Vertex n_max = options.max_n != 0 ? options.max_n : pow2(max_d);

  std::vector<CheckResult> results;
  results.push_back(facets_vs_oracle(1, std::min(max_d, 6)));
  if (max_d >= 3) results.push_back(facet_bounds(3, max_d));
  results.push_back(graph_vs_oracle(std::min<Vertex>(n_max, 1024)));
  results.push_back(edge_formula(std::min<Vertex>(n_max, 1U << 16)));
  results.push_back(average_degree_bound(std::min<Vertex>(n_max, 1U << 16)));
  results.push_back(optimization(std::min<Vertex>(n_max, 256), 100, 1));
  results.push_back(flow_certificates(std::min<Vertex>(n_max, 512)));
  results.push_back(pair_flow_audit(std::min(n_max, kAuditCap)));
  results.push_back(brute_expansion_bound(std::min<Vertex>(n_max, 18)));
  results.push_back(cube_expansion(std::min(max_d, 4)));
  results.push_back(recursion_structure(std::min<Vertex>(n_max, 256)));
  for (int d = 1; d <= max_d; ++d) results.push_back(pyramid_bounds(d, 512));
  results.push_back(pyramid_vs_oracle(std::min(max_d, 4)));
  return results;
}

}  // namespace revlex::verify
