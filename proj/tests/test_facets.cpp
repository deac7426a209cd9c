#include <doctest.h>

#include "revlex/error.hpp"
#include "revlex/facets.hpp"
#include "revlex/oracle.hpp"

using namespace revlex;

namespace {

std::vector<std::string> tags(const std::vector<LinearInequality>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) out.push_back(r.tag.to_string());
  return out;
}

const LinearInequality& find(const std::vector<LinearInequality>& rows, InequalityKind kind, int index) {
  for (const auto& r : rows) {
    if (r.tag.kind == kind && r.tag.index == index) return r;
  }
  FAIL("row not found");
  return rows.front();
}

}  // namespace

TEST_CASE("full description of small polytopes") {
  SUBCASE("v = 111") {
    const auto rows = full_description(RevlexPolytope::from_count(7));
    CHECK(rows.size() == 7);
    CHECK(tags(rows) == std::vector<std::string>{"lower-bound(0)", "lower-bound(1)", "lower-bound(2)",
                                                 "upper-bound(0)", "upper-bound(1)", "upper-bound(2)",
                                                 "full-support"});
    CHECK(rows.back().coeffs == std::vector<std::int64_t>{1, 1, 1});
    CHECK(rows.back().rhs == 2);
  }
  SUBCASE("v = 011") {
    const auto rows = full_description(RevlexPolytope::from_spec(BitVector01::parse("011")));
    const auto& cover = find(rows, InequalityKind::Cover, 0);
    CHECK(cover.coeffs == std::vector<std::int64_t>{1, 1, 1});
    CHECK(cover.rhs == 2);
    const auto& top = find(rows, InequalityKind::FullSupport, -1);
    CHECK(top.coeffs == std::vector<std::int64_t>{0, 1, 1});
    CHECK(top.rhs == 1);
  }
  SUBCASE("n = 589") {
    const auto p = RevlexPolytope::from_count(589);
    const auto rows = full_description(p);
    CHECK(rows.size() == 26);
    const auto& cover = find(rows, InequalityKind::Cover, 4);
    // u_4 plus the ones of v above 4: coordinates 6 and 9.
    CHECK(cover.coeffs == std::vector<std::int64_t>{0, 0, 0, 0, 1, 0, 1, 0, 0, 1});
    CHECK(cover.rhs == 2);
  }
  SUBCASE("cube") {
    CHECK(full_description(RevlexPolytope::from_count(16)).size() == 8);
  }
}

TEST_CASE("row shapes") {
  const auto lower = lower_bound_row(2, 4);
  CHECK(lower.coeffs == std::vector<std::int64_t>{0, 0, -1, 0});
  CHECK(lower.rhs == 0);
  const auto upper = upper_bound_row(0, 4);
  CHECK(upper.coeffs == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(upper.rhs == 1);
  CHECK(upper.to_text() == "1 0 0 0 <= 1  # upper-bound(0)");
  const auto j = upper.to_json();
  CHECK(j["coeffs"] == nlohmann::json::array({1, 0, 0, 0}));
  CHECK(j["rhs"] == 1);
  CHECK(j["tag"] == "upper-bound(0)");
}

TEST_CASE("0/1 solutions of the full description are exactly the vertices") {
  for (int d = 1; d <= 10; ++d) {
    for (Vertex n = 1; n <= pow2(d); ++n) {
      const auto rows = full_description(RevlexPolytope::from_count(n, d));
      for (Vertex y = 0; y < pow2(d); ++y) {
        const bool feasible = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.satisfied_by(y); });
        REQUIRE(feasible == (y < n));
      }
    }
  }
}

TEST_CASE("minimal description") {
  SUBCASE("v = 111 keeps every row") {
    const auto p = RevlexPolytope::from_count(7);
    CHECK(minimal_description(p) == full_description(p));
    CHECK(facet_count(p) == 7);
  }
  SUBCASE("v = 011, a prism over a triangle") {
    const auto p = RevlexPolytope::from_spec(BitVector01::parse("011"));
    const auto rows = minimal_description(p);
    CHECK(tags(rows) == std::vector<std::string>{"lower-bound(0)", "lower-bound(1)", "lower-bound(2)",
                                                 "upper-bound(0)", "full-support"});
    CHECK(facet_count(p) == 5);
    for (const auto& r : rows) CHECK(oracle::is_facet_by_rank(p, r) == oracle::FacetStatus::Facet);
    const auto all = full_description(p);
    CHECK(oracle::is_facet_by_rank(p, find(all, InequalityKind::Cover, 0)) ==
          oracle::FacetStatus::ValidNotFacet);
  }
  SUBCASE("n = 589") {
    const auto p = RevlexPolytope::from_count(589);
    CHECK(minimal_description(p).size() == 23);
    CHECK(facet_count(p) == 23);
  }
  SUBCASE("lower-dimensional input is rejected") {
    const auto p = RevlexPolytope::from_spec(BitVector01::parse("0100"));
    CHECK_THROWS_AS(minimal_description(p), HypothesisError);
    CHECK_THROWS_AS(facet_count(p), HypothesisError);
    CHECK(minimal_description(project_to_affine_hull(p)).size() == 2);
  }
}

TEST_CASE("classification") {
  const auto two = classify_facets(RevlexPolytope::from_spec(BitVector01::parse("011")));
  CHECK(two.d1 == std::vector<int>{2, 1});
  CHECK(two.d2.empty());
  CHECK(two.epsilon == -1);

  const auto table = classify_facets(RevlexPolytope::from_count(589));
  CHECK(table.d1.empty());
  CHECK(table.d2 == std::vector<int>{7, 8, 9});
  CHECK(table.epsilon == 0);

  const auto extremal = classify_facets(RevlexPolytope::from_count(pow2(12) + pow2(11) + 1));
  CHECK(extremal.epsilon == 1);
}

TEST_CASE("facet count equals the minimal description size") {
  for (int d = 1; d <= 10; ++d) {
    for (Vertex n = pow2(d - 1) + 1; n <= pow2(d); ++n) {
      const auto p = RevlexPolytope::from_count(n, d);
      REQUIRE(facet_count(p) == static_cast<std::int64_t>(minimal_description(p).size()));
    }
  }
}

TEST_CASE("minimal rows are exactly the facet-defining rows") {
  for (int d = 1; d <= 5; ++d) {
    for (Vertex n = pow2(d - 1) + 1; n <= pow2(d); ++n) {
      const auto p = RevlexPolytope::from_count(n, d);
      std::vector<LinearInequality> facets;
      for (const auto& r : full_description(p)) {
        const auto status = oracle::is_facet_by_rank(p, r);
        REQUIRE(status != oracle::FacetStatus::NotValid);
        if (status == oracle::FacetStatus::Facet) facets.push_back(r);
      }
      REQUIRE(facets == minimal_description(p));
    }
  }
}

TEST_CASE("json") {
  const auto j = to_json(minimal_description(RevlexPolytope::from_count(7)));
  REQUIRE(j.size() == 7);
  CHECK(j.back()["tag"] == "full-support");
  CHECK(j.back()["rhs"] == 2);
}
