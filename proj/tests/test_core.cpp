#include <doctest.h>

#include "revlex/core.hpp"
#include "revlex/error.hpp"
#include "revlex/rational.hpp"

using namespace revlex;

TEST_CASE("bit vectors read x_0 first") {
  const auto v = BitVector01::parse("1011001001");
  CHECK(v.size() == 10);
  CHECK(v.bits() == 589);
  CHECK(v[0]);
  CHECK_FALSE(v[1]);
  CHECK(v[9]);
  CHECK(v.weight() == 5);
  CHECK(v.to_string() == "1011001001");
  CHECK(v.flipped(1).bits() == 591);

  CHECK_THROWS_AS(BitVector01::parse(""), InputError);
  CHECK_THROWS_AS(BitVector01::parse("10a"), InputError);
  CHECK_THROWS_AS(BitVector01(8, 3), RangeError);
}

TEST_CASE("from_index and to_index") {
  CHECK(from_index(0, 4).to_string() == "0000");
  CHECK(from_index(589, 10).to_string() == "1011001001");
  CHECK(from_index(15, 4).to_string() == "1111");
  CHECK_THROWS_AS(from_index(16, 4), RangeError);

  CHECK(to_index(BitVector01::parse("000")) == 0);
  CHECK(to_index(BitVector01::parse("1011001001")) == 589);
  CHECK(to_index(unit_vector(6, 7)) == 64);

  for (int d = 1; d <= 10; ++d) {
    for (Vertex n = 0; n < pow2(d); ++n) REQUIRE(to_index(from_index(n, d)) == n);
  }
}

TEST_CASE("rlex_less") {
  CHECK(rlex_less(BitVector01::parse("10"), BitVector01::parse("01")));
  const auto x = BitVector01::parse("0110");
  CHECK_FALSE(rlex_less(x, x));
  CHECK(rlex_less(from_index(588, 10), BitVector01::parse("1011001001")));
  CHECK_THROWS_AS(rlex_less(BitVector01::parse("10"), BitVector01::parse("100")), InputError);
}

TEST_CASE("rlex order is integer order on knapsack numbers") {
  for (int d = 1; d <= 8; ++d) {
    for (Vertex a = 0; a < pow2(d); ++a) {
      for (Vertex b = 0; b < pow2(d); ++b) {
        const auto x = from_index(a, d);
        const auto y = from_index(b, d);
        REQUIRE(rlex_less(x, y) == (a < b));
        if (a != b) REQUIRE(rlex_less(x, y) != rlex_less(y, x));
      }
    }
  }
}

TEST_CASE("signature") {
  const auto table = signature_of(BitVector01::parse("1011001001"));
  CHECK(table.weight == 5);
  CHECK(table.indices == std::vector<int>{9, 6, 3, 2, 0});
  CHECK(table.cosignature == std::vector<int>{1, 4, 5, 7, 8});

  const auto unit = signature_of(unit_vector(0, 3));
  CHECK(unit.weight == 1);
  CHECK(unit.indices == std::vector<int>{0});
  CHECK(unit.cosignature == std::vector<int>{1, 2});

  CHECK(signature_of(BitVector01::parse("111")).indices == std::vector<int>{2, 1, 0});

  for (int d = 1; d <= 8; ++d) {
    for (Vertex n = 0; n < pow2(d); ++n) {
      const auto sig = signature_of(from_index(n, d));
      std::vector<bool> seen(static_cast<std::size_t>(d), false);
      for (int i : sig.indices) seen[static_cast<std::size_t>(i)] = true;
      for (int i : sig.cosignature) {
        REQUIRE_FALSE(seen[static_cast<std::size_t>(i)]);
        seen[static_cast<std::size_t>(i)] = true;
      }
      REQUIRE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
      REQUIRE(sig.weight == static_cast<int>(sig.indices.size()));
    }
  }
}

TEST_CASE("dimension envelope") {
  CHECK_NOTHROW(check_dimension(62));
  CHECK_THROWS_AS(check_dimension(63), RangeError);
  CHECK_THROWS_AS(check_dimension(0), RangeError);
  CHECK(bit_length(589) == 10);
  CHECK(ceil_log2(589) == 10);
  CHECK(ceil_log2(512) == 9);
  CHECK(ceil_log2(1) == 0);
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational_list("1,-1,2") == std::vector<Rational>{1, -1, 2});
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
}
