// Randomized invariants over sizes too large for the exhaustive suites.
#include <doctest.h>

#include <random>
#include <sstream>

#include "revlex/bounds.hpp"
#include "revlex/facets.hpp"
#include "revlex/graph.hpp"
#include "revlex/oracle.hpp"

using namespace revlex;

namespace {

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int dimension(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Vertex below(Vertex bound) { return std::uniform_int_distribution<Vertex>(0, bound - 1)(rng); }

  // n with 2^{d-1} < n <= 2^d
  Vertex full_dimensional_count(int d) { return pow2(d - 1) + 1 + below(pow2(d - 1)); }
};

}  // namespace

TEST_CASE("neighbor relation is symmetric on large polytopes") {
  Gen gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = gen.dimension(2, 48);
    const auto p = RevlexPolytope::from_count(gen.full_dimensional_count(d));
    const Vertex x = gen.below(p.n());
    for (const Vertex y : neighbors(p, x)) {
      REQUIRE(y < p.n());
      const auto back = neighbors(p, y);
      REQUIRE(std::binary_search(back.begin(), back.end(), x));
    }
  }
}

TEST_CASE("degree sum matches the edge formula") {
  Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = RevlexPolytope::from_count(1 + gen.below(pow2(13)));
    BigInt degree_sum = 0;
    for (Vertex x = 0; x < p.n(); ++x) degree_sum += static_cast<unsigned long>(neighbors(p, x).size());
    REQUIRE(degree_sum == 2 * edge_count_formula(p));
  }
}

TEST_CASE("full description separates vertices from other 0/1 points") {
  Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = gen.dimension(1, 62);
    const auto p = RevlexPolytope::from_count(1 + gen.below(pow2(d)), d);
    const auto rows = full_description(p);
    REQUIRE(rows.size() == static_cast<std::size_t>(2 * d) + p.cosignature().size() + (p.is_cube() ? 0 : 1));
    for (int k = 0; k < 50; ++k) {
      // Half of the probes near n, where the description is tightest.
      const Vertex y = k % 2 == 0 ? gen.below(pow2(d))
                                  : std::min(pow2(d) - 1, p.n() - std::min<Vertex>(p.n(), 3) + gen.below(6));
      const bool feasible = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.satisfied_by(y); });
      REQUIRE(feasible == (y < p.n()));
    }
  }
}

TEST_CASE("facet count bounds in high dimension") {
  Gen gen(14);
  for (int trial = 0; trial < 2000; ++trial) {
    const int d = gen.dimension(3, 62);
    const auto p = RevlexPolytope::from_count(gen.full_dimensional_count(d), d);
    const auto f = facet_count(p);
    REQUIRE(f >= 2 * d - 1);
    REQUIRE(f <= 3 * d - 2);
    REQUIRE(f == static_cast<std::int64_t>(minimal_description(p).size()));
  }
  for (int d = 3; d <= 62; ++d) {
    CHECK(facet_count(RevlexPolytope::from_count(pow2(d - 1) + pow2(d - 2) + 1)) == 3 * d - 2);
  }
}

TEST_CASE("average degree bound in high dimension") {
  Gen gen(15);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = RevlexPolytope::from_count(1 + gen.below(pow2(62)));
    REQUIRE(average_degree(p) <= p.dim() + 4);
  }
}

TEST_CASE("maximize against brute force on mid-size polytopes") {
  Gen gen(16);
  std::uniform_int_distribution<long> num(-30, 30);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = RevlexPolytope::from_count(1 + gen.below(pow2(12)));
    std::vector<Rational> c(static_cast<std::size_t>(p.d()));
    for (auto& ci : c) ci = num(gen.rng);
    REQUIRE(maximize(p, c).value == oracle::brute_max(p, c));
  }
}

TEST_CASE("sweep output is deterministic") {
  std::ostringstream a;
  std::ostringstream b;
  write_sweep_csv(a, sweep(9, SweepRange::Admissible));
  write_sweep_csv(b, sweep(9, SweepRange::Admissible));
  CHECK(a.str() == b.str());
}
