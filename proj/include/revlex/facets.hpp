#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "revlex/core.hpp"
#include "revlex/polytope.hpp"

namespace revlex {

enum class InequalityKind { LowerBound, UpperBound, Cover, FullSupport };

struct InequalityTag {
  InequalityKind kind = InequalityKind::LowerBound;
  int index = -1;  // coordinate for bounds and covers, -1 for the full-support row

  std::string to_string() const;
  friend bool operator==(const InequalityTag&, const InequalityTag&) = default;
};

/// coeffs^T x <= rhs with integer data.
struct LinearInequality {
  std::vector<std::int64_t> coeffs;
  std::int64_t rhs = 0;
  InequalityTag tag;

  std::int64_t lhs(Vertex x) const noexcept;
  bool satisfied_by(Vertex x) const noexcept { return lhs(x) <= rhs; }
  bool tight_at(Vertex x) const noexcept { return lhs(x) == rhs; }

  /// "a_0 a_1 ... a_{d-1} <= b  # tag"
  std::string to_text() const;
  nlohmann::json to_json() const;

  friend bool operator==(const LinearInequality&, const LinearInequality&) = default;
};

LinearInequality lower_bound_row(int i, int d);
LinearInequality upper_bound_row(int i, int d);

/// Exceptional index sets that decide which rows of P(v) define facets.
struct FacetClassification {
  std::vector<int> d1;  // Sig(v) if w(v) = 2
  std::vector<int> d2;  // {s_2 + 1, ..., d - 1} if s_2 < d - 2
  int epsilon = 0;
};

/// Bounds, one cover row per zero of v, and the full-support row:
/// 2d + |coSig(v)| + 1 rows whose 0/1 solutions are exactly the vertices.
/// For the full cube only the 2d bounds are returned.
std::vector<LinearInequality> full_description(const RevlexPolytope& polytope);

/// The facet-defining subsystem of full_description. Throws HypothesisError unless
/// the polytope is full-dimensional.
std::vector<LinearInequality> minimal_description(const RevlexPolytope& polytope);

FacetClassification classify_facets(const RevlexPolytope& polytope);

/// 2d + |{ s_w < i < s_2 : v_i = 0 }| + epsilon (2d for the cube).
std::int64_t facet_count(const RevlexPolytope& polytope);

nlohmann::json to_json(const std::vector<LinearInequality>& rows);

}  // namespace revlex
