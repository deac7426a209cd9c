#include "revlex/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "revlex/error.hpp"

namespace revlex::oracle {

namespace {

using Bits = std::vector<std::uint64_t>;

// Calls fn(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t size = m.size();
  if (size == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && m[pivot][k] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[size - 1][size - 1];
}

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& bits, std::size_t i) { return ((bits[i / 64] >> (i % 64)) & 1U) != 0; }

// Vertices tight on every row tight at both x and y; x, y adjacent iff that is {x, y}.
bool face_is_edge(const std::vector<Bits>& tight, const std::vector<std::size_t>& rows_at_x,
                  std::size_t words, std::size_t n, std::size_t y) {
  Bits face(words, ~std::uint64_t{0});
  if (n % 64 != 0) face.back() = (std::uint64_t{1} << (n % 64)) - 1;
  for (const std::size_t r : rows_at_x) {
    if (!test_bit(tight[r], y)) continue;
    for (std::size_t w = 0; w < words; ++w) face[w] &= tight[r][w];
  }
  std::size_t count = 0;
  for (const auto word : face) {
    count += static_cast<std::size_t>(std::popcount(word));
    if (count > 2) return false;
  }
  return count == 2;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

std::size_t RationalMatrix::rank() const {
  std::vector<std::vector<BigInt>> rows(rows_, std::vector<BigInt>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt scale = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), (*this)(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      rows[r][c] = x.get_num() * (scale / x.get_den());
    }
  }
  return bareiss_rank(std::move(rows));
}

std::optional<std::vector<Rational>> RationalMatrix::solve(std::span<const Rational> b) const {
  if (rows_ != cols_ || b.size() != rows_) {
    throw InputError("solve needs a square system with a matching right-hand side");
  }
  const std::size_t size = rows_;
  std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size + 1));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) m[r][c] = (*this)(r, c);
    m[r][size] = b[r];
  }
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && m[pivot][k] == 0) ++pivot;
    if (pivot == size) return std::nullopt;
    std::swap(m[pivot], m[k]);
    for (std::size_t i = 0; i < size; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const Rational factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j <= size; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  std::vector<Rational> x(size);
  for (std::size_t r = 0; r < size; ++r) x[r] = m[r][size] / m[r][r];
  return x;
}

std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

int affine_dimension(std::span<const Vertex> points, int d) {
  if (points.empty()) return -1;
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(points.size() - 1);
  for (std::size_t k = 1; k < points.size(); ++k) {
    std::vector<BigInt> row(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      row[static_cast<std::size_t>(i)] =
          static_cast<long>((points[k] >> i) & 1U) - static_cast<long>((points[0] >> i) & 1U);
    }
    rows.push_back(std::move(row));
  }
  return static_cast<int>(bareiss_rank(std::move(rows)));
}

Rational brute_max(const RevlexPolytope& polytope, std::span<const Rational> c) {
  if (c.size() != static_cast<std::size_t>(polytope.d())) {
    throw InputError("objective length does not match the dimension");
  }
  Rational best;
  bool first = true;
  for (Vertex x = 0; x < polytope.n(); ++x) {
    Rational value = 0;
    for (int i = 0; i < polytope.d(); ++i) {
      if ((x >> i) & 1U) value += c[static_cast<std::size_t>(i)];
    }
    if (first || value > best) best = value;
    first = false;
  }
  return best;
}

std::set<RationalPoint> h_vertex_enumeration(std::span<const LinearInequality> rows, int d) {
  if (d < 1 || d > 6) throw CapabilityError("vertex enumeration is limited to d <= 6");
  std::set<RationalPoint> vertices;
  const auto size = static_cast<std::size_t>(d);
  for_each_subset(rows.size(), size, [&](std::span<const std::size_t> chosen) {
    RationalMatrix a(size, size);
    std::vector<Rational> b(size);
    for (std::size_t r = 0; r < size; ++r) {
      const auto& row = rows[chosen[r]];
      for (std::size_t c = 0; c < size; ++c) a(r, c) = Rational(static_cast<long>(row.coeffs[c]));
      b[r] = Rational(static_cast<long>(row.rhs));
    }
    auto x = a.solve(b);
    if (!x) return;
    for (const auto& row : rows) {
      Rational lhs = 0;
      for (std::size_t c = 0; c < size; ++c) lhs += static_cast<long>(row.coeffs[c]) * (*x)[c];
      if (lhs > static_cast<long>(row.rhs)) return;
    }
    vertices.insert(std::move(*x));
  });
  return vertices;
}

FacetStatus is_facet_by_rank(const RevlexPolytope& polytope, const LinearInequality& row) {
  std::vector<Vertex> tight;
  for (Vertex x = 0; x < polytope.n(); ++x) {
    if (!row.satisfied_by(x)) return FacetStatus::NotValid;
    if (row.tight_at(x)) tight.push_back(x);
  }
  return affine_dimension(tight, polytope.d()) == polytope.dim() - 1 ? FacetStatus::Facet
                                                                      : FacetStatus::ValidNotFacet;
}

FaceOracle::FaceOracle(const RevlexPolytope& polytope)
    : n_(polytope.n()), words_((polytope.n() + 63) / 64), rows_tight_at_(polytope.n()) {
  const auto rows = full_description(polytope);
  tight_.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Bits bits = make_bits(n_);
    for (Vertex x = 0; x < n_; ++x) {
      if (rows[r].tight_at(x)) {
        set_bit(bits, x);
        rows_tight_at_[x].push_back(r);
      }
    }
    tight_.push_back(std::move(bits));
  }
}

bool FaceOracle::adjacent(Vertex x, Vertex y) const {
  if (x >= n_ || y >= n_) throw MembershipError("vertex index outside the polytope");
  if (x == y) return false;
  return face_is_edge(tight_, rows_tight_at_[x], words_, n_, y);
}

PolytopeGraph FaceOracle::graph() const {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n_; ++x) {
    for (Vertex y = x + 1; y < n_; ++y) {
      if (face_is_edge(tight_, rows_tight_at_[x], words_, n_, y)) edges.emplace_back(x, y);
    }
  }
  return PolytopeGraph::from_edges(n_, std::move(edges));
}

bool smallest_face_adjacent(const RevlexPolytope& polytope, Vertex x, Vertex y) {
  return FaceOracle(polytope).adjacent(x, y);
}

ExpansionResult brute_expansion(const PolytopeGraph& graph) {
  const Vertex n = graph.n();
  if (n < 2) throw InputError("expansion needs at least two vertices");
  if (n > 22) throw CapabilityError("brute-force expansion is limited to n <= 22");

  std::vector<std::uint32_t> nbr(n, 0);
  for (Vertex x = 0; x < n; ++x) {
    for (const Vertex y : graph.neighbors(x)) nbr[x] |= std::uint32_t{1} << y;
  }

  std::uint32_t set = 0;
  std::int64_t cut = 0;
  std::size_t best_cut = 0;
  std::size_t best_size = 0;
  std::uint32_t best_set = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int v = std::countr_zero(step);
    const std::uint32_t bit = std::uint32_t{1} << v;
    const int inside = std::popcount(nbr[static_cast<std::size_t>(v)] & set);
    const int deg = std::popcount(nbr[static_cast<std::size_t>(v)]);
    if (set & bit) {
      set &= ~bit;
      cut -= deg - 2 * inside;
    } else {
      set |= bit;
      cut += deg - 2 * inside;
    }
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size == 0 || 2 * size > n) continue;
    const auto c = static_cast<std::size_t>(cut);
    if (best_size == 0 || c * best_size < best_cut * size) {
      best_cut = c;
      best_size = size;
      best_set = set;
    }
  }

  ExpansionResult result;
  result.value = Rational(static_cast<unsigned long>(best_cut), static_cast<unsigned long>(best_size));
  result.value.canonicalize();
  for (Vertex x = 0; x < n; ++x) {
    if ((best_set >> x) & 1U) result.witness.push_back(x);
  }
  return result;
}

std::size_t cut_size(const PolytopeGraph& graph, std::span<const Vertex> set) {
  std::vector<bool> in_set(graph.n(), false);
  for (const Vertex x : set) in_set.at(x) = true;
  std::size_t cut = 0;
  for (const Vertex x : set) {
    for (const Vertex y : graph.neighbors(x)) {
      if (!in_set[y]) ++cut;
    }
  }
  return cut;
}

std::vector<Hyperplane> brute_facets(std::span<const BitVector01> points) {
  if (points.empty()) throw InputError("empty point set");
  const int d = points.front().size();
  std::vector<Vertex> bits;
  for (const auto& p : points) bits.push_back(p.bits());
  if (affine_dimension(bits, d) != d) throw HypothesisError("point set is not full-dimensional");

  const auto size = static_cast<std::size_t>(d);
  auto dot = [&](const std::vector<BigInt>& a, Vertex x) {
    BigInt s = 0;
    for (std::size_t i = 0; i < size; ++i) {
      if ((x >> i) & 1U) s += a[i];
    }
    return s;
  };

  std::set<Hyperplane> found;
  for_each_subset(points.size(), size, [&](std::span<const std::size_t> chosen) {
    // Rows p_k - p_0; the normal is the vector of signed maximal minors.
    std::vector<std::vector<BigInt>> diff;
    for (std::size_t k = 1; k < size; ++k) {
      std::vector<BigInt> row(size);
      for (std::size_t i = 0; i < size; ++i) {
        row[i] = static_cast<long>((bits[chosen[k]] >> i) & 1U) -
                 static_cast<long>((bits[chosen[0]] >> i) & 1U);
      }
      diff.push_back(std::move(row));
    }
    std::vector<BigInt> normal(size);
    bool nonzero = false;
    for (std::size_t j = 0; j < size; ++j) {
      std::vector<std::vector<BigInt>> minor;
      for (const auto& row : diff) {
        std::vector<BigInt> m;
        for (std::size_t i = 0; i < size; ++i) {
          if (i != j) m.push_back(row[i]);
        }
        minor.push_back(std::move(m));
      }
      normal[j] = bareiss_determinant(std::move(minor));
      if (j % 2 == 1) normal[j] = -normal[j];
      if (normal[j] != 0) nonzero = true;
    }
    if (!nonzero) return;

    BigInt g = 0;
    for (const auto& a : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    for (auto& a : normal) a /= g;
    BigInt rhs = dot(normal, bits[chosen[0]]);

    bool above = false;
    bool below = false;
    for (const Vertex x : bits) {
      const BigInt lhs = dot(normal, x);
      if (lhs > rhs) above = true;
      if (lhs < rhs) below = true;
    }
    if (above && below) return;
    if (above) {
      for (auto& a : normal) a = -a;
      rhs = -rhs;
    }
    found.insert(Hyperplane{std::move(normal), std::move(rhs)});
  });
  return {found.begin(), found.end()};
}

PolytopeGraph graph_from_facets(std::span<const BitVector01> points,
                                std::span<const Hyperplane> facets) {
  const std::size_t n = points.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> tight;
  std::vector<std::vector<std::size_t>> rows_at(n);
  for (std::size_t r = 0; r < facets.size(); ++r) {
    Bits bits = make_bits(n);
    for (std::size_t k = 0; k < n; ++k) {
      BigInt lhs = 0;
      for (int i = 0; i < points[k].size(); ++i) {
        if (points[k][i]) lhs += facets[r].normal[static_cast<std::size_t>(i)];
      }
      if (lhs == facets[r].rhs) {
        set_bit(bits, k);
        rows_at[k].push_back(r);
      }
    }
    tight.push_back(std::move(bits));
  }
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (face_is_edge(tight, rows_at[x], words, n, y)) edges.emplace_back(x, y);
    }
  }
  return PolytopeGraph::from_edges(n, std::move(edges));
}

}  // namespace revlex::oracle
