#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace revlex {

/// Vertices are identified with their knapsack number sum_i x_i 2^i.
using Vertex = std::uint64_t;

/// Largest supported ambient dimension; vertex counts must fit in a machine word.
inline constexpr int kMaxDimension = 62;

/// A point of {0,1}^d. Stored as the knapsack number, so coordinate i is bit i.
class BitVector01 {
 public:
  BitVector01(Vertex bits, int d);

  /// Parses "x_0 x_1 ... x_{d-1}" written without separators, e.g. "1011001001".
  static BitVector01 parse(std::string_view text);

  int size() const noexcept { return d_; }
  Vertex bits() const noexcept { return bits_; }
  bool operator[](int i) const noexcept { return ((bits_ >> i) & 1U) != 0; }

  int weight() const noexcept;
  bool is_zero() const noexcept { return bits_ == 0; }

  /// Coordinatewise addition mod 2 with the unit vector u_i.
  BitVector01 flipped(int i) const;

  std::string to_string() const;

  friend bool operator==(const BitVector01&, const BitVector01&) = default;

 private:
  Vertex bits_;
  int d_;
};

/// One-positions of v in strictly decreasing order plus the ascending zero positions.
struct Signature {
  int weight = 0;
  std::vector<int> indices;
  std::vector<int> cosignature;
};

/// Reverse-lexicographic comparison: the highest differing coordinate is 1 in y.
bool rlex_less(const BitVector01& x, const BitVector01& y);

BitVector01 from_index(Vertex n, int d);
Vertex to_index(const BitVector01& x) noexcept;
Signature signature_of(const BitVector01& v);

/// Unit vector u_i of length d.
BitVector01 unit_vector(int i, int d);

/// Checks 1 <= d <= kMaxDimension and throws RangeError otherwise.
void check_dimension(int d);

/// 2^k as a Vertex; k must lie in [0, 63].
constexpr Vertex pow2(int k) noexcept { return Vertex{1} << k; }

/// Number of binary digits of n (0 for n = 0).
int bit_length(Vertex n) noexcept;

/// min{ j : n <= 2^j }.
int ceil_log2(Vertex n) noexcept;

}  // namespace revlex
