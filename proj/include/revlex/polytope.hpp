#pragma once

#include <json.hpp>

#include <optional>
#include <ranges>
#include <span>
#include <vector>

#include "revlex/core.hpp"
#include "revlex/rational.hpp"

namespace revlex {

/// A block face: the vertices with x_{s_q} = 0 and x_i = v_i above s_q.
/// In knapsack numbering a block is the interval [first, first + 2^cube_dim).
struct Block {
  int q = 0;         // 1-based block number
  int cube_dim = 0;  // s_q
  Vertex first = 0;

  Vertex size() const noexcept { return pow2(cube_dim); }
  Vertex last() const noexcept { return first + size() - 1; }
  bool contains(Vertex x) const noexcept { return x >= first && x - first < size(); }
};

/// The convex hull of the first n points of {0,1}^d in reverse-lexicographic order.
///
/// The polytope is kept implicit: its vertices are the numbers 0..n-1 read as bit
/// vectors, its block decomposition is the binary expansion of n. When n = 2^d the
/// polytope is the full cube; that is the one case without a spec vector v in {0,1}^d,
/// and its single block has cube_dim = d.
class RevlexPolytope {
 public:
  /// Builds P(n) in ambient dimension `ambient` (default: the minimal one, dim P(n),
  /// raised to 1 for the single point).
  static RevlexPolytope from_count(Vertex n, std::optional<int> ambient = std::nullopt);

  /// Builds P(v) = conv{ x : x <_rlex v } with ambient dimension v.size().
  static RevlexPolytope from_spec(const BitVector01& v);

  Vertex n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  int dim() const noexcept { return dim_; }

  /// Block dimensions s_1 > ... > s_w (the one-positions of n).
  std::span<const int> signature() const noexcept { return signature_; }
  int weight() const noexcept { return static_cast<int>(signature_.size()); }
  std::span<const Block> blocks() const noexcept { return blocks_; }

  /// The spec vector v with n = a^T v; absent for the full cube.
  std::optional<BitVector01> spec() const;

  /// Ascending zero positions of v in [0, d); empty for the full cube.
  std::vector<int> cosignature() const;

  bool is_cube() const noexcept { return n_ == pow2(d_); }
  bool full_dimensional() const noexcept { return dim_ == d_; }
  bool contains(Vertex x) const noexcept { return x < n_; }

  /// Lazy vertex range 0..n-1 mapped to bit vectors.
  auto vertices() const {
    return std::views::iota(Vertex{0}, n_) |
           std::views::transform([d = d_](Vertex x) { return from_index(x, d); });
  }

 private:
  RevlexPolytope(Vertex n, int d);

  Vertex n_;
  int d_;
  int dim_;
  std::vector<int> signature_;
  std::vector<Block> blocks_;
};

int dimension(const RevlexPolytope& polytope) noexcept;

/// 1-based number of the block containing x. Throws MembershipError for x outside X(v).
int block_of(const RevlexPolytope& polytope, const BitVector01& x);
int block_of(const RevlexPolytope& polytope, Vertex x);

struct Optimum {
  Rational value;
  BitVector01 argmax;
};

/// max{ c^T x : x in P } from the block decomposition. Ties go to the smallest block
/// number, and coordinates with c_i = 0 are set to 0.
Optimum maximize(const RevlexPolytope& polytope, std::span<const Rational> c);

/// Drops the coordinates that are zero on every vertex, giving P(n) in R^{dim}.
RevlexPolytope project_to_affine_hull(const RevlexPolytope& polytope);

nlohmann::json to_json(const RevlexPolytope& polytope);

}  // namespace revlex
