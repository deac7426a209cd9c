#include "revlex/expansion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "revlex/error.hpp"
#include "revlex/polytope.hpp"

namespace revlex {

namespace {

Rational from_vertex(Vertex v) { return Rational(BigInt(static_cast<unsigned long>(v))); }

std::string arc_name(Arc arc) {
  return "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
}

void require_flow_size(Vertex n) {
  if (n < 2) throw RangeError("multi-commodity flows need at least 2 vertices, got " + std::to_string(n));
}

}  // namespace

FlowAssignment::FlowAssignment(Vertex n, std::vector<std::pair<Arc, Rational>> arcs) : n_(n) {
  std::sort(arcs.begin(), arcs.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  for (auto& [arc, value] : arcs) {
    if (arc.tail >= n || arc.head >= n || arc.tail == arc.head) {
      throw InputError("arc " + arc_name(arc) + " is not an arc on " + std::to_string(n) + " vertices");
    }
    if (sgn(value) < 0) throw InputError("negative flow on arc " + arc_name(arc));
    if (!arcs_.empty() && arcs_.back().first == arc) {
      arcs_.back().second += value;
    } else {
      arcs_.emplace_back(arc, std::move(value));
    }
  }
  for (const auto& [arc, value] : arcs_) {
    if (value > phi_max_) phi_max_ = value;
  }
}

Rational FlowAssignment::at(Arc arc) const {
  const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), arc,
                                   [](const auto& entry, const Arc& key) { return entry.first < key; });
  if (it == arcs_.end() || it->first != arc) return 0;
  return it->second;
}

Rational FlowAssignment::outflow(const std::vector<bool>& in_set) const {
  Rational total = 0;
  for (const auto& [arc, value] : arcs_) {
    if (in_set[arc.tail] && !in_set[arc.head]) total += value;
  }
  return total;
}

std::vector<Rational> FlowAssignment::divergence() const {
  std::vector<Rational> net(n_, Rational(0));
  for (const auto& [arc, value] : arcs_) {
    net[arc.tail] += value;
    net[arc.head] -= value;
  }
  return net;
}

Rational partial_prism_alpha(Vertex n) {
  Rational alpha(from_vertex(n - 1) / from_vertex(n + 1));
  return alpha;
}

const FlowAssignment& FlowBuilder::build(Vertex n) {
  if (n == 0) throw RangeError("flow on the empty polytope");
  if (const auto it = memo_.find(n); it != memo_.end()) return it->second;

  std::vector<std::pair<Arc, Rational>> arcs;
  if (n >= 2) {
    const Vertex half = (n + 1) / 2;
    const FlowAssignment& sub = build(half);
    if (n % 2 == 0) {
      // Prism: both halves carry a doubled copy of the sub-flow, and every rung
      // (x, x xor u_0) carries n/2.
      for (const auto& [arc, value] : sub.arcs()) {
        const Rational doubled = 2 * value;
        arcs.push_back({{2 * arc.tail, 2 * arc.head}, doubled});
        arcs.push_back({{2 * arc.tail + 1, 2 * arc.head + 1}, doubled});
      }
      const Rational rung = from_vertex(n) / 2;
      for (Vertex k = 0; k < half; ++k) {
        arcs.push_back({{2 * k, 2 * k + 1}, rung});
        arcs.push_back({{2 * k + 1, 2 * k}, rung});
      }
    } else {
      // Partial prism: the last vertex n-1 is shared by both halves, both copies are
      // scaled by 1 + alpha and the remaining rungs carry alpha (n-1)/2.
      const Vertex last = n - 1;
      const Rational alpha = partial_prism_alpha(n);
      const Rational scale = 1 + alpha;
      auto odd_side = [&](Vertex k) { return k == half - 1 ? last : 2 * k + 1; };
      for (const auto& [arc, value] : sub.arcs()) {
        const Rational scaled = scale * value;
        arcs.push_back({{2 * arc.tail, 2 * arc.head}, scaled});
        arcs.push_back({{odd_side(arc.tail), odd_side(arc.head)}, scaled});
      }
      const Rational rung = alpha * from_vertex(n - 1) / 2;
      for (Vertex k = 0; k + 1 < half; ++k) {
        arcs.push_back({{2 * k, 2 * k + 1}, rung});
        arcs.push_back({{2 * k + 1, 2 * k}, rung});
      }
    }
  }
  return memo_.emplace(n, FlowAssignment(n, std::move(arcs))).first->second;
}

FlowAssignment build_mcf(Vertex n) {
  require_flow_size(n);
  FlowBuilder builder;
  return builder.build(n);
}

Rational phi_max_recurrence(Vertex n) {
  if (n == 0) throw RangeError("phi_max of the empty polytope");
  if (n == 1) return 0;
  const Vertex half = (n + 1) / 2;
  const Rational sub = phi_max_recurrence(half);
  if (n % 2 == 0) {
    const Rational rung = from_vertex(n) / 2;
    return std::max(Rational(2 * sub), rung);
  }
  const Rational alpha = partial_prism_alpha(n);
  const Rational scaled = (1 + alpha) * sub;
  const Rational rung = alpha * from_vertex(n - 1) / 2;
  return std::max(scaled, rung);
}

const PairFlow& PairFlowOracle::flow(Vertex n, Vertex x, Vertex y) {
  if (x == y || x >= n || y >= n) {
    throw InputError("pair flow needs distinct vertices below " + std::to_string(n));
  }
  const auto key = std::make_tuple(n, x, y);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

  PairFlow result;
  auto add_arc = [&](Vertex tail, Vertex head, const Rational& value) {
    result[Arc{tail, head}] += value;
  };
  auto lift = [&](const PairFlow& sub, auto&& map, const Rational& scale) {
    for (const auto& [arc, value] : sub) result[Arc{map(arc.tail), map(arc.head)}] += scale * value;
  };

  const Vertex half = (n + 1) / 2;
  const auto even_side = [](Vertex k) { return 2 * k; };
  const Rational one = 1;

  if (n % 2 == 0) {
    const auto odd_side = [](Vertex k) { return 2 * k + 1; };
    const bool x_even = x % 2 == 0;
    const bool y_even = y % 2 == 0;
    if (x_even == y_even) {
      const PairFlow& sub = flow(half, x / 2, y / 2);
      if (x_even) {
        lift(sub, even_side, one);
      } else {
        lift(sub, odd_side, one);
      }
    } else {
      const Vertex rung_end = x ^ 1U;
      add_arc(x, rung_end, one);
      if (rung_end != y) {
        const PairFlow& sub = flow(half, rung_end / 2, y / 2);
        if (y_even) {
          lift(sub, even_side, one);
        } else {
          lift(sub, odd_side, one);
        }
      }
    }
  } else {
    const Vertex last = n - 1;
    const Vertex shared = half - 1;  // index of `last` in the half-size polytope
    const auto odd_side = [&](Vertex k) { return k == shared ? last : 2 * k + 1; };
    const auto odd_index = [&](Vertex z) { return z == last ? shared : z / 2; };
    const auto in_even = [](Vertex z) { return z % 2 == 0; };
    const auto in_odd = [&](Vertex z) { return z % 2 == 1 || z == last; };
    const Rational alpha = partial_prism_alpha(n);
    const Rational beta = 1 - alpha;

    if (in_even(x) && in_even(y)) {
      lift(flow(half, x / 2, y / 2), even_side, one);
    } else if (in_odd(x) && in_odd(y)) {
      lift(flow(half, odd_index(x), odd_index(y)), odd_side, one);
    } else if (in_even(x)) {
      // x even (not last), y odd: alpha over the rung, the rest through `last`.
      const Vertex rung_end = x + 1;
      add_arc(x, rung_end, alpha);
      if (rung_end != y) lift(flow(half, odd_index(rung_end), odd_index(y)), odd_side, alpha);
      lift(flow(half, x / 2, shared), even_side, beta);
      lift(flow(half, shared, odd_index(y)), odd_side, beta);
    } else {
      const Vertex rung_end = x - 1;
      add_arc(x, rung_end, alpha);
      if (rung_end != y) lift(flow(half, rung_end / 2, y / 2), even_side, alpha);
      lift(flow(half, odd_index(x), shared), odd_side, beta);
      lift(flow(half, shared, y / 2), even_side, beta);
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

AuditReport audit_pair_flows(Vertex n, PairFlowOracle* oracle) {
  require_flow_size(n);
  if (n > kAuditCap) {
    throw CapabilityError("per-pair audit is limited to n <= " + std::to_string(kAuditCap) +
                          ", got " + std::to_string(n));
  }
  PairFlowOracle local;
  PairFlowOracle& pairs = oracle ? *oracle : local;
  const auto graph = build_graph(RevlexPolytope::from_count(n));

  std::map<Arc, Rational> total;
  std::vector<Rational> net(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::string pair = "pair (" + std::to_string(x) + "," + std::to_string(y) + ")";
      std::fill(net.begin(), net.end(), Rational(0));
      for (const auto& [arc, value] : pairs.flow(n, x, y)) {
        if (sgn(value) < 0) return {false, pair + ": negative flow on " + arc_name(arc)};
        if (!graph.adjacent(arc.tail, arc.head)) {
          return {false, pair + ": flow on non-edge " + arc_name(arc)};
        }
        net[arc.tail] += value;
        net[arc.head] -= value;
        total[arc] += value;
      }
      for (Vertex z = 0; z < n; ++z) {
        const Rational expected = z == x ? 1 : (z == y ? -1 : 0);
        if (net[z] != expected) {
          return {false, pair + ": net outflow " + to_string(net[z]) + " at vertex " + std::to_string(z)};
        }
      }
    }
  }

  const auto aggregate = build_mcf(n);
  std::size_t positive = 0;
  for (const auto& [arc, value] : total) {
    if (sgn(value) == 0) continue;
    ++positive;
    if (aggregate.at(arc) != value) {
      return {false, "aggregate mismatch on " + arc_name(arc) + ": pairs sum to " + to_string(value) +
                         ", builder has " + to_string(aggregate.at(arc))};
    }
  }
  std::size_t aggregate_positive = 0;
  for (const auto& entry : aggregate.arcs()) aggregate_positive += sgn(entry.second) > 0 ? 1 : 0;
  if (positive != aggregate_positive) {
    return {false, "aggregate has arcs that no pair flow uses"};
  }
  return {};
}

ExpansionCertificate make_certificate(Vertex n, const Rational& phi_max, bool audited) {
  ExpansionCertificate cert;
  cert.n = n;
  cert.phi_max = phi_max;
  cert.lower_bound = from_vertex(n) / (2 * phi_max);
  cert.audited = audited;
  return cert;
}

ExpansionCertificate certify_expansion(Vertex n, bool audit) {
  require_flow_size(n);
  if (audit && n > kAuditCap) {
    throw CapabilityError("per-pair audit is limited to n <= " + std::to_string(kAuditCap) +
                          ", got " + std::to_string(n));
  }
  if (audit) {
    const auto report = audit_pair_flows(n);
    if (!report.ok) throw std::logic_error("flow audit failed for n = " + std::to_string(n) + ": " + report.failure);
  }
  const Rational phi = n <= kMaterializeCap ? build_mcf(n).phi_max() : phi_max_recurrence(n);
  return make_certificate(n, phi, audit);
}

std::vector<Arc> illegal_support(const FlowAssignment& flow, const PolytopeGraph& graph) {
  std::vector<Arc> bad;
  for (const auto& [arc, value] : flow.arcs()) {
    if (sgn(value) > 0 && (arc.tail >= graph.n() || arc.head >= graph.n() ||
                           !graph.adjacent(arc.tail, arc.head))) {
      bad.push_back(arc);
    }
  }
  return bad;
}

namespace {

// Edges of `graph` with both ends of the given parity, mapped by x -> x / 2.
std::vector<Edge> halved_edges(const PolytopeGraph& graph, Vertex parity) {
  std::vector<Edge> out;
  for (const auto& [u, v] : graph.edges()) {
    if (u % 2 == parity && v % 2 == parity) out.emplace_back(u / 2, v / 2);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool halving_is_isomorphism(Vertex n) {
  require_flow_size(n);
  const auto graph = build_graph(RevlexPolytope::from_count(n));
  const auto half = build_graph(RevlexPolytope::from_count((n + 1) / 2)).edges();
  if (halved_edges(graph, 0) != half) return false;
  return n % 2 == 1 || halved_edges(graph, 1) == half;
}

bool partial_prism_embeds(Vertex n) {
  if (n < 3 || n % 2 == 0) throw InputError("partial prism check needs odd n >= 3");
  const auto graph = build_graph(RevlexPolytope::from_count(n));
  const Vertex last = n - 1;
  auto psi = [last](Vertex x) { return x == last ? x : (x ^ 1U); };
  for (const auto& [u, v] : graph.edges()) {
    if (u % 2 == 0 && v % 2 == 0 && !graph.adjacent(psi(u), psi(v))) return false;
  }
  return true;
}

}  // namespace revlex
