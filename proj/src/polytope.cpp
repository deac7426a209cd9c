#include "revlex/polytope.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "revlex/error.hpp"

namespace revlex {

RevlexPolytope::RevlexPolytope(Vertex n, int d) : n_(n), d_(d), dim_(ceil_log2(n)) {
  Vertex first = 0;
  for (int i = bit_length(n) - 1; i >= 0; --i) {
    if (((n >> i) & 1U) == 0) continue;
    signature_.push_back(i);
    blocks_.push_back(Block{static_cast<int>(blocks_.size()) + 1, i, first});
    first += pow2(i);
  }
}

RevlexPolytope RevlexPolytope::from_count(Vertex n, std::optional<int> ambient) {
  if (n == 0) throw RangeError("empty polytope: the vertex count must be at least 1");
  const int dim = ceil_log2(n);
  const int d = ambient.value_or(std::max(dim, 1));
  check_dimension(d);
  if (d < dim || n > pow2(d)) {
    throw RangeError(std::to_string(n) + " vertices do not fit in dimension " + std::to_string(d));
  }
  return RevlexPolytope(n, d);
}

RevlexPolytope RevlexPolytope::from_spec(const BitVector01& v) {
  if (v.is_zero()) {
    throw HypothesisError("the all-zero vector does not define a polytope (no point precedes it)");
  }
  return RevlexPolytope(to_index(v), v.size());
}

std::optional<BitVector01> RevlexPolytope::spec() const {
  if (is_cube()) return std::nullopt;
  return BitVector01(n_, d_);
}

std::vector<int> RevlexPolytope::cosignature() const {
  std::vector<int> zeros;
  if (is_cube()) return zeros;
  for (int i = 0; i < d_; ++i) {
    if (((n_ >> i) & 1U) == 0) zeros.push_back(i);
  }
  return zeros;
}

int dimension(const RevlexPolytope& polytope) noexcept { return polytope.dim(); }

int block_of(const RevlexPolytope& polytope, Vertex x) {
  if (!polytope.contains(x)) {
    throw MembershipError("point " + std::to_string(x) + " is not among the " +
                          std::to_string(polytope.n()) + " vertices");
  }
  // The highest coordinate where x differs from v is s_q of x's block.
  const int top = std::bit_width(x ^ polytope.n()) - 1;
  const auto sig = polytope.signature();
  const auto it = std::find(sig.begin(), sig.end(), top);
  return static_cast<int>(it - sig.begin()) + 1;
}

int block_of(const RevlexPolytope& polytope, const BitVector01& x) {
  if (x.size() != polytope.d()) throw InputError("block_of: dimension mismatch");
  return block_of(polytope, to_index(x));
}

Optimum maximize(const RevlexPolytope& polytope, std::span<const Rational> c) {
  const int d = polytope.d();
  if (static_cast<int>(c.size()) != d) {
    throw InputError("objective has " + std::to_string(c.size()) + " entries, expected " +
                     std::to_string(d));
  }
  // positive_prefix[k] = c^+({0, ..., k-1})
  std::vector<Rational> positive_prefix(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i < d; ++i) {
    const auto& ci = c[static_cast<std::size_t>(i)];
    positive_prefix[static_cast<std::size_t>(i) + 1] =
        positive_prefix[static_cast<std::size_t>(i)] + (sgn(ci) > 0 ? ci : Rational(0));
  }

  const auto sig = polytope.signature();
  Rational fixed_part = 0;
  Rational best;
  std::size_t best_q = 0;
  for (std::size_t q = 0; q < sig.size(); ++q) {
    Rational value = fixed_part + positive_prefix[static_cast<std::size_t>(sig[q])];
    if (q == 0 || value > best) {
      best = value;
      best_q = q;
    }
    if (q + 1 < sig.size()) fixed_part += c[static_cast<std::size_t>(sig[q])];
  }

  Vertex argmax = 0;
  for (std::size_t p = 0; p < best_q; ++p) argmax |= pow2(sig[p]);
  for (int i = 0; i < sig[best_q]; ++i) {
    if (sgn(c[static_cast<std::size_t>(i)]) > 0) argmax |= pow2(i);
  }
  return Optimum{best, BitVector01(argmax, d)};
}

RevlexPolytope project_to_affine_hull(const RevlexPolytope& polytope) {
  return RevlexPolytope::from_count(polytope.n());
}

nlohmann::json to_json(const RevlexPolytope& polytope) {
  nlohmann::json j;
  j["n"] = polytope.n();
  j["d"] = polytope.d();
  const auto v = polytope.spec();
  j["v"] = v ? nlohmann::json(v->to_string()) : nlohmann::json(nullptr);
  j["dim"] = polytope.dim();
  const std::vector<int> sig(polytope.signature().begin(), polytope.signature().end());
  j["signature"] = sig;
  std::vector<int> block_dims;
  for (const auto& block : polytope.blocks()) block_dims.push_back(block.cube_dim);
  j["block_dims"] = block_dims;
  return j;
}

}  // namespace revlex
