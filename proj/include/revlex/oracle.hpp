#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "revlex/core.hpp"
#include "revlex/facets.hpp"
#include "revlex/graph.hpp"
#include "revlex/polytope.hpp"
#include "revlex/rational.hpp"

namespace revlex::oracle {

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Rank by Bareiss elimination after clearing each row's denominators.
  std::size_t rank() const;

  /// Unique solution of the square system A x = b, or nullopt when A is singular.
  std::optional<std::vector<Rational>> solve(std::span<const Rational> b) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Rank of an integer matrix by fraction-free Gaussian elimination.
std::size_t bareiss_rank(std::vector<std::vector<BigInt>> rows);

/// Dimension of the affine hull of a set of 0/1 points (-1 for the empty set).
int affine_dimension(std::span<const Vertex> points, int d);

Rational brute_max(const RevlexPolytope& polytope, std::span<const Rational> c);

using RationalPoint = std::vector<Rational>;

/// Vertices of { x : A x <= b } by solving every d-subset of rows. Requires d <= 6.
std::set<RationalPoint> h_vertex_enumeration(std::span<const LinearInequality> rows, int d);

enum class FacetStatus { NotValid, ValidNotFacet, Facet };

/// Validity over every vertex, then the affine dimension of the tight set.
FacetStatus is_facet_by_rank(const RevlexPolytope& polytope, const LinearInequality& row);

/// Precomputes, for each row of the full description, the vertices where it is tight.
/// Two vertices are adjacent iff the vertices tight on every row tight at both are
/// exactly the two of them.
class FaceOracle {
 public:
  explicit FaceOracle(const RevlexPolytope& polytope);

  bool adjacent(Vertex x, Vertex y) const;
  PolytopeGraph graph() const;

 private:
  using Bits = std::vector<std::uint64_t>;

  Vertex n_;
  std::size_t words_;
  std::vector<Bits> tight_;
  std::vector<std::vector<std::size_t>> rows_tight_at_;
};

bool smallest_face_adjacent(const RevlexPolytope& polytope, Vertex x, Vertex y);

struct ExpansionResult {
  Rational value;
  std::vector<Vertex> witness;
};

/// min |delta(S)| / |S| over 0 < |S| <= floor(n/2), by Gray-code subset enumeration.
ExpansionResult brute_expansion(const PolytopeGraph& graph);

/// |delta(S)| for the vertex set S.
std::size_t cut_size(const PolytopeGraph& graph, std::span<const Vertex> set);

/// Facet normals of conv(points) found by testing the hyperplane through every
/// affinely independent d-subset. Requires a full-dimensional point set.
struct Hyperplane {
  std::vector<BigInt> normal;
  BigInt rhs;
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
  }
};
std::vector<Hyperplane> brute_facets(std::span<const BitVector01> points);

/// Graph of conv(points) given its facets, by the smallest-face test.
PolytopeGraph graph_from_facets(std::span<const BitVector01> points,
                                std::span<const Hyperplane> facets);

}  // namespace revlex::oracle
