#include "revlex/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "revlex/error.hpp"

namespace revlex {

PolytopeGraph PolytopeGraph::from_edges(Vertex n, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    if (u >= n || v >= n) throw InputError("edge endpoint outside 0.." + std::to_string(n - 1));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  PolytopeGraph graph;
  graph.n_ = n;
  graph.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    ++graph.offsets_[u + 1];
    ++graph.offsets_[v + 1];
  }
  for (std::size_t i = 1; i < graph.offsets_.size(); ++i) graph.offsets_[i] += graph.offsets_[i - 1];
  graph.adjacency_.resize(graph.offsets_.back());
  std::vector<std::size_t> fill(graph.offsets_.begin(), graph.offsets_.end() - 1);
  // Smaller neighbors first, then larger ones; lexicographic edge order keeps both
  // runs ascending.
  for (const auto& [u, v] : edges) graph.adjacency_[fill[v]++] = u;
  for (const auto& [u, v] : edges) graph.adjacency_[fill[u]++] = v;
  return graph;
}

std::span<const Vertex> PolytopeGraph::neighbors(Vertex x) const {
  if (x >= n_) throw RangeError("vertex " + std::to_string(x) + " out of range");
  return {adjacency_.data() + offsets_[x], offsets_[x + 1] - offsets_[x]};
}

bool PolytopeGraph::adjacent(Vertex x, Vertex y) const {
  const auto list = neighbors(x);
  return std::binary_search(list.begin(), list.end(), y);
}

std::vector<Edge> PolytopeGraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

namespace {

Vertex low_mask(int bits) { return pow2(bits) - 1; }

// Whether base x in block q is adjacent to its B-set:
// the highest coordinate below s_q where x differs from v must not be in Sig(v).
bool b_condition(const RevlexPolytope& polytope, Vertex x, int s_q) {
  const Vertex diff = (x ^ polytope.n()) & low_mask(s_q);
  if (diff == 0) return true;
  const int m = std::bit_width(diff) - 1;
  return ((polytope.n() >> m) & 1U) == 0;
}

template <typename Fn>
void for_each_subset(Vertex anchor, const std::vector<int>& free_bits, Fn&& fn) {
  const auto count = pow2(static_cast<int>(free_bits.size()));
  for (Vertex mask = 0; mask < count; ++mask) {
    Vertex z = anchor;
    for (std::size_t k = 0; k < free_bits.size(); ++k) {
      if ((mask >> k) & 1U) z |= pow2(free_bits[k]);
    }
    fn(z);
  }
}

}  // namespace

std::vector<Vertex> NeighborPatch::a_set() const {
  std::vector<Vertex> out;
  for_each_subset(a_anchor, free_bits, [&](Vertex z) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> NeighborPatch::b_set() const {
  std::vector<Vertex> out;
  for_each_subset(a_anchor | pow2(split_bit), free_bits, [&](Vertex z) { out.push_back(z); });
  std::sort(out.begin(), out.end());
  return out;
}

NeighborPatch make_patch(const RevlexPolytope& polytope, Vertex x, int p) {
  const int q = block_of(polytope, x);
  if (p < 1 || p >= q) {
    throw InputError("patch needs 1 <= p < q; got p = " + std::to_string(p) +
                     ", q = " + std::to_string(q));
  }
  const auto sig = polytope.signature();
  const auto blocks = polytope.blocks();
  const int s_p = sig[static_cast<std::size_t>(p - 1)];
  const int s_q = sig[static_cast<std::size_t>(q - 1)];

  NeighborPatch patch;
  patch.p = p;
  patch.q = q;
  patch.base = x;
  patch.delta = (p + s_p) - (q + s_q);
  patch.split_bit = s_q;
  patch.b_adjacent = b_condition(polytope, x, s_q);

  Vertex anchor = blocks[static_cast<std::size_t>(p - 1)].first | (x & low_mask(s_q));
  for (int r = p + 1; r < q; ++r) anchor |= pow2(sig[static_cast<std::size_t>(r - 1)]);
  patch.a_anchor = anchor;
  for (int i = s_q + 1; i < s_p; ++i) {
    if (((polytope.n() >> i) & 1U) == 0) patch.free_bits.push_back(i);
  }
  return patch;
}

std::vector<Vertex> neighbors(const RevlexPolytope& polytope, Vertex x) {
  const int own_q = block_of(polytope, x);
  const auto sig = polytope.signature();
  const auto blocks = polytope.blocks();
  std::vector<Vertex> out;

  const int own_s = sig[static_cast<std::size_t>(own_q - 1)];
  for (int i = 0; i < own_s; ++i) out.push_back(x ^ pow2(i));

  // x as the base vertex of patches towards shallower blocks.
  for (int p = 1; p < own_q; ++p) {
    const auto patch = make_patch(polytope, x, p);
    for_each_subset(patch.a_anchor, patch.free_bits, [&](Vertex z) { out.push_back(z); });
    if (patch.b_adjacent) {
      for_each_subset(patch.a_anchor | pow2(patch.split_bit), patch.free_bits,
                      [&](Vertex z) { out.push_back(z); });
    }
  }

  // x as a member of the A- or B-set of a base y in a deeper block q. Such a y is
  // determined by x's coordinates below s_q.
  bool middle_ones = true;  // x_{s_r} = 1 for own_q < r < q
  for (int q = own_q + 1; q <= polytope.weight() && middle_ones; ++q) {
    const int s_q = sig[static_cast<std::size_t>(q - 1)];
    const Vertex y = blocks[static_cast<std::size_t>(q - 1)].first | (x & low_mask(s_q));
    const bool in_b = ((x >> s_q) & 1U) != 0;
    if (!in_b || b_condition(polytope, y, s_q)) out.push_back(y);
    middle_ones = in_b;
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PolytopeGraph build_graph(const RevlexPolytope& polytope, const GraphOptions& options) {
  if (polytope.n() > options.vertex_cap) {
    throw CapabilityError("graph of P(" + std::to_string(polytope.n()) +
                          ") exceeds the vertex cap " + std::to_string(options.vertex_cap));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count_formula(polytope).get_ui()));

  const auto blocks = polytope.blocks();
  for (const auto& block : blocks) {
    for (Vertex x = block.first; x <= block.last(); ++x) {
      for (int i = 0; i < block.cube_dim; ++i) {
        if (((x >> i) & 1U) == 0) edges.emplace_back(x, x | pow2(i));
      }
      for (int p = 1; p < block.q; ++p) {
        const auto patch = make_patch(polytope, x, p);
        for_each_subset(patch.a_anchor, patch.free_bits, [&](Vertex z) { edges.emplace_back(z, x); });
        if (patch.b_adjacent) {
          for_each_subset(patch.a_anchor | pow2(patch.split_bit), patch.free_bits,
                          [&](Vertex z) { edges.emplace_back(z, x); });
        }
      }
    }
  }
  return PolytopeGraph::from_edges(polytope.n(), std::move(edges));
}

BigInt edge_count_formula(const RevlexPolytope& polytope) {
  const auto sig = polytope.signature();
  const auto w = sig.size();
  auto power = [](long k) -> BigInt { return BigInt(1) << static_cast<mp_bitcnt_t>(k); };

  // tail[q] = sum_{r > q} 2^{s_r} (0-based q)
  std::vector<BigInt> tail(w + 1, 0);
  for (std::size_t q = w; q-- > 0;) tail[q] = tail[q + 1] + power(sig[q]);

  BigInt edges = 0;
  for (std::size_t p = 0; p < w; ++p) {
    if (sig[p] > 0) edges += BigInt(sig[p]) * power(sig[p] - 1);
  }
  for (std::size_t p = 0; p < w; ++p) {
    for (std::size_t q = p + 1; q < w; ++q) {
      const long a_exp = static_cast<long>(p) + sig[p] - static_cast<long>(q);
      const long delta = a_exp - sig[q];
      edges += 2 * power(a_exp) - tail[q + 1] * power(delta);
    }
  }
  return edges;
}

Rational average_degree(const RevlexPolytope& polytope) {
  Rational avg(2 * edge_count_formula(polytope), BigInt(static_cast<unsigned long>(polytope.n())));
  avg.canonicalize();
  return avg;
}

void write_edge_list(std::ostream& out, const PolytopeGraph& graph) {
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const PolytopeGraph& graph, std::string_view name) {
  out << "graph " << name << " {\n";
  for (Vertex x = 0; x < graph.n(); ++x) out << "  " << x << ";\n";
  for (const auto& [u, v] : graph.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

nlohmann::json to_json(const PolytopeGraph& graph) {
  auto adjacency = nlohmann::json::array();
  for (Vertex x = 0; x < graph.n(); ++x) {
    const auto list = graph.neighbors(x);
    adjacency.push_back(std::vector<Vertex>(list.begin(), list.end()));
  }
  return {{"n", graph.n()}, {"edges", graph.edge_count()}, {"adjacency", adjacency}};
}

}  // namespace revlex
