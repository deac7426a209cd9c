#include "revlex/core.hpp"

#include <bit>
#include <string>

#include "revlex/error.hpp"

namespace revlex {

void check_dimension(int d) {
  if (d < 1 || d > kMaxDimension) {
    throw RangeError("dimension " + std::to_string(d) + " outside supported range [1, " +
                     std::to_string(kMaxDimension) + "]");
  }
}

int bit_length(Vertex n) noexcept { return std::bit_width(n); }

int ceil_log2(Vertex n) noexcept { return n <= 1 ? 0 : std::bit_width(n - 1); }

BitVector01::BitVector01(Vertex bits, int d) : bits_(bits), d_(d) {
  check_dimension(d);
  if (bits >= pow2(d)) {
    throw RangeError("value " + std::to_string(bits) + " does not fit in " + std::to_string(d) +
                     " coordinates");
  }
}

BitVector01 BitVector01::parse(std::string_view text) {
  if (text.empty()) throw InputError("empty bit string");
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw RangeError("bit string longer than " + std::to_string(kMaxDimension));
  }
  Vertex bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= pow2(static_cast<int>(i));
    } else if (text[i] != '0') {
      throw InputError("bit string may only contain 0 and 1: '" + std::string(text) + "'");
    }
  }
  return BitVector01(bits, static_cast<int>(text.size()));
}

int BitVector01::weight() const noexcept { return std::popcount(bits_); }

BitVector01 BitVector01::flipped(int i) const {
  if (i < 0 || i >= d_) throw RangeError("coordinate " + std::to_string(i) + " out of range");
  return BitVector01(bits_ ^ pow2(i), d_);
}

std::string BitVector01::to_string() const {
  std::string s(static_cast<std::size_t>(d_), '0');
  for (int i = 0; i < d_; ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

bool rlex_less(const BitVector01& x, const BitVector01& y) {
  if (x.size() != y.size()) {
    throw InputError("rlex_less: length mismatch " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
  const Vertex diff = x.bits() ^ y.bits();
  if (diff == 0) return false;
  const int top = std::bit_width(diff) - 1;
  return y[top];
}

BitVector01 from_index(Vertex n, int d) { return BitVector01(n, d); }

Vertex to_index(const BitVector01& x) noexcept { return x.bits(); }

Signature signature_of(const BitVector01& v) {
  Signature sig;
  for (int i = v.size() - 1; i >= 0; --i) {
    if (v[i]) sig.indices.push_back(i);
  }
  for (int i = 0; i < v.size(); ++i) {
    if (!v[i]) sig.cosignature.push_back(i);
  }
  sig.weight = static_cast<int>(sig.indices.size());
  return sig;
}

BitVector01 unit_vector(int i, int d) {
  check_dimension(d);
  if (i < 0 || i >= d) throw RangeError("unit vector index out of range");
  return BitVector01(pow2(i), d);
}

}  // namespace revlex
