#include "revlex/facets.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "revlex/error.hpp"

namespace revlex {

std::string InequalityTag::to_string() const {
  switch (kind) {
    case InequalityKind::LowerBound:
      return "lower-bound(" + std::to_string(index) + ")";
    case InequalityKind::UpperBound:
      return "upper-bound(" + std::to_string(index) + ")";
    case InequalityKind::Cover:
      return "cover(" + std::to_string(index) + ")";
    case InequalityKind::FullSupport:
      return "full-support";
  }
  return "unknown";
}

std::int64_t LinearInequality::lhs(Vertex x) const noexcept {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if ((x >> i) & 1U) sum += coeffs[i];
  }
  return sum;
}

std::string LinearInequality::to_text() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out << ' ';
    out << coeffs[i];
  }
  out << " <= " << rhs << "  # " << tag.to_string();
  return out.str();
}

nlohmann::json LinearInequality::to_json() const {
  return {{"coeffs", coeffs}, {"rhs", rhs}, {"tag", tag.to_string()}};
}

nlohmann::json to_json(const std::vector<LinearInequality>& rows) {
  auto array = nlohmann::json::array();
  for (const auto& row : rows) array.push_back(row.to_json());
  return array;
}

LinearInequality lower_bound_row(int i, int d) {
  LinearInequality row{std::vector<std::int64_t>(static_cast<std::size_t>(d), 0), 0,
                       {InequalityKind::LowerBound, i}};
  row.coeffs[static_cast<std::size_t>(i)] = -1;
  return row;
}

LinearInequality upper_bound_row(int i, int d) {
  LinearInequality row{std::vector<std::int64_t>(static_cast<std::size_t>(d), 0), 1,
                       {InequalityKind::UpperBound, i}};
  row.coeffs[static_cast<std::size_t>(i)] = 1;
  return row;
}

namespace {

// x_i + sum_{j in Sig(v), j > i} x_j <= |Sig_{>i}(v)|
LinearInequality cover_row(const RevlexPolytope& polytope, int i) {
  const auto d = static_cast<std::size_t>(polytope.d());
  LinearInequality row{std::vector<std::int64_t>(d, 0), 0, {InequalityKind::Cover, i}};
  row.coeffs[static_cast<std::size_t>(i)] = 1;
  for (int s : polytope.signature()) {
    if (s > i) {
      row.coeffs[static_cast<std::size_t>(s)] = 1;
      ++row.rhs;
    }
  }
  return row;
}

// sum_{j in Sig(v)} x_j <= w(v) - 1
LinearInequality full_support_row(const RevlexPolytope& polytope) {
  const auto d = static_cast<std::size_t>(polytope.d());
  LinearInequality row{std::vector<std::int64_t>(d, 0), polytope.weight() - 1,
                       {InequalityKind::FullSupport, -1}};
  for (int s : polytope.signature()) row.coeffs[static_cast<std::size_t>(s)] = 1;
  return row;
}

void require_full_dimensional(const RevlexPolytope& polytope) {
  if (!polytope.full_dimensional()) {
    throw HypothesisError("P(" + std::to_string(polytope.n()) + ") has dimension " +
                          std::to_string(polytope.dim()) + " < " + std::to_string(polytope.d()) +
                          "; facet descriptions need a full-dimensional polytope");
  }
}

bool contains(const std::vector<int>& set, int i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

}  // namespace

std::vector<LinearInequality> full_description(const RevlexPolytope& polytope) {
  const int d = polytope.d();
  std::vector<LinearInequality> rows;
  for (int i = 0; i < d; ++i) rows.push_back(lower_bound_row(i, d));
  for (int i = 0; i < d; ++i) rows.push_back(upper_bound_row(i, d));
  if (polytope.is_cube()) return rows;
  for (int i : polytope.cosignature()) rows.push_back(cover_row(polytope, i));
  rows.push_back(full_support_row(polytope));
  return rows;
}

FacetClassification classify_facets(const RevlexPolytope& polytope) {
  require_full_dimensional(polytope);
  FacetClassification result;
  if (polytope.is_cube()) return result;

  const int d = polytope.d();
  const auto sig = polytope.signature();
  const int w = polytope.weight();
  // Full dimension forces s_1 = d - 1 and w >= 2.
  if (w == 2) result.d1.assign(sig.begin(), sig.end());
  const int s2 = sig[1];
  if (s2 < d - 2) {
    for (int i = s2 + 1; i < d; ++i) result.d2.push_back(i);
  }
  if (w == 2) {
    result.epsilon = -1;
  } else {
    result.epsilon = ((polytope.n() >> (d - 2)) & 1U) ? 1 : 0;
  }
  return result;
}

std::vector<LinearInequality> minimal_description(const RevlexPolytope& polytope) {
  const auto classes = classify_facets(polytope);
  const int d = polytope.d();
  std::vector<LinearInequality> rows;
  for (int i = 0; i < d; ++i) rows.push_back(lower_bound_row(i, d));
  for (int i = 0; i < d; ++i) {
    if (!contains(classes.d1, i) && !contains(classes.d2, i)) rows.push_back(upper_bound_row(i, d));
  }
  if (polytope.is_cube()) return rows;
  const int s_last = polytope.signature().back();
  for (int i : polytope.cosignature()) {
    if (i > s_last) rows.push_back(cover_row(polytope, i));
  }
  rows.push_back(full_support_row(polytope));
  return rows;
}

std::int64_t facet_count(const RevlexPolytope& polytope) {
  const auto classes = classify_facets(polytope);
  const int d = polytope.d();
  if (polytope.is_cube()) return 2 * d;
  const auto sig = polytope.signature();
  std::int64_t gaps = 0;
  for (int i = sig.back() + 1; i < sig[1]; ++i) {
    if (((polytope.n() >> i) & 1U) == 0) ++gaps;
  }
  return 2 * d + gaps + classes.epsilon;
}

}  // namespace revlex
