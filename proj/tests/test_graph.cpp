#include <doctest.h>

#include <sstream>

#include "revlex/error.hpp"
#include "revlex/graph.hpp"
#include "revlex/oracle.hpp"

using namespace revlex;

namespace {

std::vector<Vertex> as_vector(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("neighbors of small polytopes") {
  const auto p = RevlexPolytope::from_count(7);
  CHECK(neighbors(p, 0) == std::vector<Vertex>{1, 2, 4});
  CHECK(neighbors(p, 3) == std::vector<Vertex>{1, 2, 5, 6});
  CHECK(neighbors(RevlexPolytope::from_count(2), 0) == std::vector<Vertex>{1});
  CHECK_THROWS_AS(neighbors(p, 7), MembershipError);

  const oracle::FaceOracle faces(p);
  for (Vertex y : {1, 2, 5, 6}) CHECK(faces.adjacent(3, y));
  CHECK_FALSE(faces.adjacent(3, 0));
  CHECK_FALSE(faces.adjacent(3, 4));
}

TEST_CASE("patches") {
  // n = 7, base 6 = (0,1,1) in block 3; patch with block 1.
  const auto p = RevlexPolytope::from_count(7);
  const auto patch = make_patch(p, 6, 1);
  CHECK(patch.p == 1);
  CHECK(patch.q == 3);
  CHECK(patch.delta == 0);
  CHECK(patch.a_set().size() == 1);
  CHECK(patch.b_set().size() == 1);

  // n = 589: blocks 1 and 2 have s = 9, 6, so delta = (1 + 9) - (2 + 6) = 2.
  const auto table = RevlexPolytope::from_count(589);
  const Vertex base = table.blocks()[1].first + 5;
  const auto wide = make_patch(table, base, 1);
  CHECK(wide.delta == 2);
  const auto a = wide.a_set();
  const auto b = wide.b_set();
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == 4);
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(block_of(table, a[k]) == 1);
    CHECK((a[k] & 63U) == (base & 63U));
    CHECK(((a[k] >> 6) & 1U) == 0);
    CHECK(b[k] == (a[k] | 64U));
  }
}

TEST_CASE("build_graph") {
  const auto triangle = build_graph(RevlexPolytope::from_count(3));
  CHECK(triangle.edge_count() == 3);
  CHECK(build_graph(RevlexPolytope::from_count(7)).edge_count() == 12);
  for (int d = 1; d <= 8; ++d) {
    const auto cube = build_graph(RevlexPolytope::from_count(pow2(d)));
    CHECK(cube.edge_count() == static_cast<std::size_t>(d) * pow2(d - 1));
    for (Vertex x = 0; x < cube.n(); ++x) REQUIRE(cube.degree(x) == static_cast<std::size_t>(d));
  }
  CHECK(build_graph(RevlexPolytope::from_count(1)).edge_count() == 0);

  GraphOptions small;
  small.vertex_cap = 100;
  CHECK_THROWS_AS(build_graph(RevlexPolytope::from_count(101), small), CapabilityError);
}

TEST_CASE("graph equals the smallest-face oracle") {
  for (Vertex n = 1; n <= 128; ++n) {
    const auto p = RevlexPolytope::from_count(n);
    const auto graph = build_graph(p);
    REQUIRE(graph == oracle::FaceOracle(p).graph());
    for (Vertex x = 0; x < n; ++x) REQUIRE(neighbors(p, x) == as_vector(graph.neighbors(x)));
  }
}

TEST_CASE("adjacency lists are sorted, symmetric and loop-free") {
  for (Vertex n = 2; n <= 600; n += 7) {
    const auto graph = build_graph(RevlexPolytope::from_count(n));
    for (Vertex x = 0; x < n; ++x) {
      const auto list = graph.neighbors(x);
      REQUIRE(std::adjacent_find(list.begin(), list.end(), std::greater_equal<>()) == list.end());
      for (Vertex y : list) {
        REQUIRE(y != x);
        REQUIRE(graph.adjacent(y, x));
      }
    }
  }
}

TEST_CASE("blocks are faces: their cube edges are present") {
  for (Vertex n = 2; n <= 300; ++n) {
    const auto p = RevlexPolytope::from_count(n);
    const auto graph = build_graph(p);
    for (const auto& block : p.blocks()) {
      for (Vertex x = block.first; x <= block.last(); ++x) {
        for (int i = 0; i < block.cube_dim; ++i) REQUIRE(graph.adjacent(x, x ^ pow2(i)));
      }
    }
  }
}

TEST_CASE("even n is a prism over P(n/2)") {
  for (Vertex n = 2; n <= 512; n += 2) {
    const auto graph = build_graph(RevlexPolytope::from_count(n));
    for (const auto& [u, v] : graph.edges()) {
      if (u % 2 == v % 2) REQUIRE(graph.adjacent(u ^ 1U, v ^ 1U));
    }
    for (Vertex x = 0; x < n; x += 2) REQUIRE(graph.adjacent(x, x + 1));
  }
}

TEST_CASE("edge count formula") {
  CHECK(edge_count_formula(RevlexPolytope::from_count(3)) == 3);
  CHECK(edge_count_formula(RevlexPolytope::from_count(7)) == 12);
  CHECK(edge_count_formula(RevlexPolytope::from_count(589)) == 3427);
  for (int d = 1; d <= 62; ++d) {
    REQUIRE(edge_count_formula(RevlexPolytope::from_count(pow2(d))) == BigInt(d) * (BigInt(1) << (d - 1)));
  }
  for (Vertex n = 1; n <= 4096; ++n) {
    const auto p = RevlexPolytope::from_count(n);
    REQUIRE(edge_count_formula(p) == BigInt(static_cast<unsigned long>(build_graph(p).edge_count())));
  }
}

TEST_CASE("average degree") {
  CHECK(average_degree(RevlexPolytope::from_count(7)) == Rational(24, 7));
  CHECK(average_degree(RevlexPolytope::from_count(3)) == 2);
  for (int d = 1; d <= 20; ++d) CHECK(average_degree(RevlexPolytope::from_count(pow2(d))) == d);
  for (Vertex n = 1; n <= 4096; ++n) {
    const auto p = RevlexPolytope::from_count(n);
    REQUIRE(average_degree(p) <= p.dim() + 4);
  }
  // Large n through the closed form only.
  const auto big = RevlexPolytope::from_count((Vertex{1} << 61) + 12345);
  CHECK(average_degree(big) <= big.dim() + 4);
}

TEST_CASE("writers") {
  const auto graph = build_graph(RevlexPolytope::from_count(3));
  std::ostringstream list;
  write_edge_list(list, graph);
  CHECK(list.str() == "0 1\n0 2\n1 2\n");

  std::ostringstream dot;
  write_dot(dot, graph, "P3");
  CHECK(dot.str() == "graph P3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");

  const auto j = to_json(graph);
  CHECK(j["n"] == 3);
  CHECK(j["edges"] == 3);
  CHECK(j["adjacency"][0] == nlohmann::json::array({1, 2}));
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(PolytopeGraph::from_edges(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(PolytopeGraph::from_edges(3, {{0, 3}}), InputError);
  const auto g = PolytopeGraph::from_edges(3, {{2, 0}, {0, 2}, {1, 0}});
  CHECK(g.edge_count() == 2);
  CHECK(as_vector(g.neighbors(0)) == std::vector<Vertex>{1, 2});
  CHECK_THROWS_AS(g.neighbors(3), RangeError);
}
