#include <doctest.h>

#include <random>

#include "revlex/error.hpp"
#include "revlex/oracle.hpp"

using namespace revlex;
using namespace revlex::oracle;

namespace {

const LinearInequality& row_tagged(const std::vector<LinearInequality>& rows, InequalityKind kind, int index) {
  return *std::find_if(rows.begin(), rows.end(),
                       [&](const auto& r) { return r.tag.kind == kind && r.tag.index == index; });
}

std::set<RationalPoint> points_of(Vertex n, int d) {
  std::set<RationalPoint> out;
  for (Vertex x = 0; x < n; ++x) {
    RationalPoint p;
    for (int i = 0; i < d; ++i) p.emplace_back(static_cast<long>((x >> i) & 1U));
    out.insert(p);
  }
  return out;
}

}  // namespace

TEST_CASE("rank") {
  RationalMatrix m(3, 3);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  m(2, 2) = Rational(-3, 7);
  CHECK(m.rank() == 2);

  CHECK(bareiss_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(bareiss_rank({{0, 1, 1}, {1, 0, 1}, {1, 1, 2}}) == 2);
  CHECK(bareiss_rank({}) == 0);

  // Row order does not change the rank.
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<BigInt>> rows(5, std::vector<BigInt>(4));
    for (auto& r : rows) {
      for (auto& x : r) x = entry(rng);
    }
    // last row depends on the first two
    for (std::size_t c = 0; c < 4; ++c) rows[4][c] = rows[0][c] - rows[1][c];
    const auto base = bareiss_rank(rows);
    std::shuffle(rows.begin(), rows.end(), rng);
    REQUIRE(bareiss_rank(rows) == base);
    REQUIRE(base <= 4);
  }
}

TEST_CASE("solve") {
  RationalMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 3;
  const std::vector<Rational> b{3, 5};
  const auto x = m.solve(b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));

  RationalMatrix singular(2, 2);
  singular(0, 0) = 1;
  singular(0, 1) = 2;
  singular(1, 0) = 2;
  singular(1, 1) = 4;
  CHECK_FALSE(singular.solve(b).has_value());
}

TEST_CASE("affine dimension") {
  const std::vector<Vertex> triangle{3, 5, 6};
  CHECK(affine_dimension(triangle, 3) == 2);
  CHECK(affine_dimension(std::vector<Vertex>{}, 3) == -1);
  CHECK(affine_dimension(std::vector<Vertex>{4}, 3) == 0);
}

TEST_CASE("brute_max") {
  const auto p = RevlexPolytope::from_count(7);
  CHECK(brute_max(p, std::vector<Rational>{1, -1, 2}) == 3);
  CHECK(brute_max(p, std::vector<Rational>(3, Rational(0))) == 0);
  CHECK(brute_max(RevlexPolytope::from_count(1), std::vector<Rational>{4}) == 0);
}

TEST_CASE("vertex enumeration") {
  CHECK(h_vertex_enumeration(full_description(RevlexPolytope::from_count(7)), 3) == points_of(7, 3));
  CHECK(h_vertex_enumeration(full_description(RevlexPolytope::from_count(6)), 3) == points_of(6, 3));
  for (int d = 1; d <= 5; ++d) {
    std::vector<LinearInequality> box;
    for (int i = 0; i < d; ++i) {
      box.push_back(lower_bound_row(i, d));
      box.push_back(upper_bound_row(i, d));
    }
    CHECK(h_vertex_enumeration(box, d).size() == pow2(d));
  }
  CHECK_THROWS_AS(h_vertex_enumeration({}, 7), CapabilityError);
}

TEST_CASE("facetness by rank") {
  const auto seven = RevlexPolytope::from_count(7);
  const auto rows = full_description(seven);
  CHECK(is_facet_by_rank(seven, row_tagged(rows, InequalityKind::FullSupport, -1)) == FacetStatus::Facet);

  const auto six = RevlexPolytope::from_count(6);
  const auto six_rows = full_description(six);
  CHECK(is_facet_by_rank(six, row_tagged(six_rows, InequalityKind::UpperBound, 2)) == FacetStatus::ValidNotFacet);

  for (Vertex n = 5; n <= 8; ++n) {
    const auto p = RevlexPolytope::from_count(n);
    for (int i = 0; i < 3; ++i) CHECK(is_facet_by_rank(p, lower_bound_row(i, 3)) == FacetStatus::Facet);
  }

  LinearInequality too_tight{{1, 1, 1}, 1, {}};
  CHECK(is_facet_by_rank(seven, too_tight) == FacetStatus::NotValid);
}

TEST_CASE("smallest face adjacency") {
  const auto p = RevlexPolytope::from_count(7);
  CHECK(smallest_face_adjacent(p, 3, 5));
  CHECK_FALSE(smallest_face_adjacent(p, 0, 3));
  CHECK(smallest_face_adjacent(RevlexPolytope::from_count(2), 0, 1));
  CHECK_THROWS_AS(smallest_face_adjacent(p, 0, 7), MembershipError);

  for (Vertex n = 2; n <= 40; ++n) {
    const FaceOracle faces(RevlexPolytope::from_count(n));
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) REQUIRE(faces.adjacent(x, y) == faces.adjacent(y, x));
    }
  }
}

TEST_CASE("brute-force expansion") {
  const auto triangle = brute_expansion(build_graph(RevlexPolytope::from_count(3)));
  CHECK(triangle.value == 2);
  CHECK(triangle.witness.size() == 1);

  const auto cube_graph = build_graph(RevlexPolytope::from_count(8));
  const auto cube = brute_expansion(cube_graph);
  CHECK(cube.value == 1);
  CHECK(cube.witness.size() == 4);
  CHECK(cut_size(cube_graph, cube.witness) == 4);
  // The witness is a facet of the cube: one coordinate is constant on it.
  bool facet = false;
  for (int i = 0; i < 3; ++i) {
    const auto bit = (cube.witness.front() >> i) & 1U;
    facet = facet || std::all_of(cube.witness.begin(), cube.witness.end(),
                                 [&](Vertex x) { return ((x >> i) & 1U) == bit; });
  }
  CHECK(facet);

  CHECK(brute_expansion(build_graph(RevlexPolytope::from_count(2))).value == 1);
  CHECK_THROWS_AS(brute_expansion(build_graph(RevlexPolytope::from_count(23))), CapabilityError);
  CHECK_THROWS_AS(brute_expansion(build_graph(RevlexPolytope::from_count(1))), InputError);
}

TEST_CASE("brute-force facets") {
  std::vector<BitVector01> cube;
  for (Vertex x = 0; x < 8; ++x) cube.emplace_back(x, 3);
  const auto facets = brute_facets(cube);
  CHECK(facets.size() == 6);
  CHECK(graph_from_facets(cube, facets).edge_count() == 12);

  std::vector<BitVector01> simplex{BitVector01(0, 3), unit_vector(0, 3), unit_vector(1, 3), unit_vector(2, 3)};
  const auto simplex_facets = brute_facets(simplex);
  CHECK(simplex_facets.size() == 4);
  CHECK(std::find(simplex_facets.begin(), simplex_facets.end(), Hyperplane{{1, 1, 1}, 1}) != simplex_facets.end());

  std::vector<BitVector01> flat{BitVector01(0, 3), unit_vector(0, 3), unit_vector(1, 3)};
  CHECK_THROWS_AS(brute_facets(flat), HypothesisError);
}
