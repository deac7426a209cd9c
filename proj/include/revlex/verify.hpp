#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "revlex/core.hpp"

namespace revlex::verify {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::size_t cases = 0;
  std::string failure;  // first failing case, if any
};

/// Facet count, minimal description and the full description's 0/1 solutions against
/// the rank test and vertex enumeration, for every full-dimensional P with
/// d_min <= d <= d_max (d_max <= 6).
CheckResult facets_vs_oracle(int d_min, int d_max);

/// 2d - 1 <= f <= 3d - 2, the minimum exactly at weight two and the maximum exactly at
/// n = 2^{d-1} + 2^{d-2} + 1.
CheckResult facet_bounds(int d_min, int d_max);

/// build_graph and neighbors() against the smallest-face oracle for 1 <= n <= n_max.
CheckResult graph_vs_oracle(Vertex n_max);

/// Closed-form edge count against the explicit edge set for 1 <= n <= n_max.
CheckResult edge_formula(Vertex n_max);

/// 2|E|/n <= dim + 4 for 1 <= n <= n_max.
CheckResult average_degree_bound(Vertex n_max);

/// maximize() against brute_max on random rational objectives.
CheckResult optimization(Vertex n_max, int samples, std::uint64_t seed);

/// Aggregated flows for 2 <= n <= n_max: support inside the graph, zero net
/// divergence, phi_max <= n/2, phi_max equal to the recurrence, bound >= 1.
CheckResult flow_certificates(Vertex n_max);

/// Per-pair flows re-derived and summed, 2 <= n <= n_max (n_max <= 64).
CheckResult pair_flow_audit(Vertex n_max);

/// Exact expansion >= 1 and >= the certified bound, 2 <= n <= n_max (n_max <= 22).
CheckResult brute_expansion_bound(Vertex n_max);

/// Exact expansion of the d-cube is 1 for 1 <= d <= d_max.
CheckResult cube_expansion(int d_max);

/// Halving and partial-prism structure used by the flow recursion, n <= n_max.
CheckResult recursion_structure(Vertex n_max);

/// For every admissible n: facets <= 3d and <= d + 2 log2 n + 2, average degree
/// <= d + 4, certified expansion >= 1 when n <= cert_max.
CheckResult pyramid_bounds(int d, Vertex cert_max);

/// Pyramid facet count and graph against brute-force facets of the embedded points,
/// every admissible (d, n) with d <= d_max (d_max <= 5).
CheckResult pyramid_vs_oracle(int d_max);

struct SuiteOptions {
  int max_d = 5;
  Vertex max_n = 0;  // 0: 2^max_d
};

/// Every check above with ranges clipped to max_d / max_n and to each oracle's cap.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

}  // namespace revlex::verify
