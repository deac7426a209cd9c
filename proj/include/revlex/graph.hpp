#pragma once

#include <json.hpp>

#include <cstddef>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "revlex/core.hpp"
#include "revlex/polytope.hpp"
#include "revlex/rational.hpp"

namespace revlex {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on 0..n-1 with sorted adjacency lists (CSR layout).
class PolytopeGraph {
 public:
  PolytopeGraph() = default;

  /// Symmetrizes, sorts and deduplicates `edges`; loops are rejected.
  static PolytopeGraph from_edges(Vertex n, std::vector<Edge> edges);

  Vertex n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex x) const;
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }
  bool adjacent(Vertex x, Vertex y) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const PolytopeGraph&, const PolytopeGraph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// The pair (p, q) of blocks seen from a base vertex x of block q. The A-set and
/// B-set are subsets of block p of size 2^delta that agree with x below s_q and
/// have x_{s_r} = 1 for p < r < q; they differ only in coordinate s_q.
struct NeighborPatch {
  int p = 0;
  int q = 0;
  Vertex base = 0;
  int delta = 0;
  /// Whether x is adjacent to the B-set as well as the A-set.
  bool b_adjacent = false;
  Vertex a_anchor = 0;  // the A-set member with every free coordinate 0
  int split_bit = 0;    // s_q, the coordinate separating A from B
  std::vector<int> free_bits;

  std::vector<Vertex> a_set() const;
  std::vector<Vertex> b_set() const;
};

NeighborPatch make_patch(const RevlexPolytope& polytope, Vertex x, int p);

/// Sorted neighbor list of x, including edges generated from deeper blocks.
std::vector<Vertex> neighbors(const RevlexPolytope& polytope, Vertex x);

struct GraphOptions {
  Vertex vertex_cap = pow2(20);
};

/// Cube edges of every block plus the A/B cross edges, generated from the deeper
/// endpoint and merged by a sort-dedup pass. Throws CapabilityError above the cap.
PolytopeGraph build_graph(const RevlexPolytope& polytope, const GraphOptions& options = {});

/// Closed-form edge count of P(n).
BigInt edge_count_formula(const RevlexPolytope& polytope);

/// 2|E|/n from the closed form.
Rational average_degree(const RevlexPolytope& polytope);

void write_edge_list(std::ostream& out, const PolytopeGraph& graph);
void write_dot(std::ostream& out, const PolytopeGraph& graph, std::string_view name);
nlohmann::json to_json(const PolytopeGraph& graph);

}  // namespace revlex
