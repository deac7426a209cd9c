#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revlex/core.hpp"
#include "revlex/graph.hpp"
#include "revlex/rational.hpp"

namespace revlex {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Flow values on arcs of the bidirected graph; arcs absent from the list carry 0.
/// Arcs are kept sorted.
class FlowAssignment {
 public:
  FlowAssignment() = default;
  FlowAssignment(Vertex n, std::vector<std::pair<Arc, Rational>> arcs);

  Vertex n() const noexcept { return n_; }
  std::span<const std::pair<Arc, Rational>> arcs() const noexcept { return arcs_; }
  Rational at(Arc arc) const;
  const Rational& phi_max() const noexcept { return phi_max_; }

  /// Total flow on arcs leaving the vertex set marked in `in_set`.
  Rational outflow(const std::vector<bool>& in_set) const;

  /// Net outflow at every vertex.
  std::vector<Rational> divergence() const;

 private:
  Vertex n_ = 0;
  std::vector<std::pair<Arc, Rational>> arcs_;
  Rational phi_max_;
};

/// Builds the aggregated multi-commodity flows of P(n) by the prism (n even) and
/// partial-prism (n odd) recursions, memoizing every sub-size it visits.
class FlowBuilder {
 public:
  const FlowAssignment& build(Vertex n);

 private:
  std::map<Vertex, FlowAssignment> memo_;
};

/// Aggregated flow of P(n) where every ordered pair of distinct vertices ships one unit.
FlowAssignment build_mcf(Vertex n);

/// phi_max of build_mcf(n) from the multiplier recursion alone, without arcs:
/// max(2 phi(n/2), n/2) for even n and max((1+a) phi((n+1)/2), a (n-1)/2) with
/// a = (n-1)/(n+1) for odd n.
Rational phi_max_recurrence(Vertex n);

/// Multiplier alpha = (n-1)/(n+1) of the partial-prism step.
Rational partial_prism_alpha(Vertex n);

/// A single commodity's flow.
using PairFlow = std::map<Arc, Rational>;

/// Pair flow from x to y in P(n), re-derived from the recursive definition.
class PairFlowOracle {
 public:
  const PairFlow& flow(Vertex n, Vertex x, Vertex y);

 private:
  std::map<std::tuple<Vertex, Vertex, Vertex>, PairFlow> memo_;
};

struct AuditReport {
  bool ok = true;
  std::string failure;
};

inline constexpr Vertex kAuditCap = 64;

/// Reconstructs every pair flow of P(n), checks each ships exactly one unit along
/// graph arcs, and that their sum equals build_mcf(n). CapabilityError above kAuditCap.
AuditReport audit_pair_flows(Vertex n, PairFlowOracle* oracle = nullptr);

struct ExpansionCertificate {
  Vertex n = 0;
  Rational phi_max;
  Rational lower_bound;  // n / (2 phi_max)
  bool audited = false;
};

/// Flows are materialized up to this size; certificates for larger n take phi_max from
/// the recurrence.
inline constexpr Vertex kMaterializeCap = 4096;

ExpansionCertificate certify_expansion(Vertex n, bool audit);
ExpansionCertificate make_certificate(Vertex n, const Rational& phi_max, bool audited);

/// Arcs with positive flow whose edge is missing from `graph`.
std::vector<Arc> illegal_support(const FlowAssignment& flow, const PolytopeGraph& graph);

/// x -> floor(x/2) maps the face {x_0 = 0} of P(n) onto P(ceil(n/2)) as a graph
/// isomorphism; for even n the same holds for {x_0 = 1} via x -> floor(x/2).
bool halving_is_isomorphism(Vertex n);

/// For odd n: x -> x xor 1 (fixing the last vertex n-1) sends every edge of the
/// even-vertex subgraph to an edge of the odd-plus-last subgraph.
bool partial_prism_embeds(Vertex n);

}  // namespace revlex
