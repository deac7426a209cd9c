#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "revlex/core.hpp"
#include "revlex/expansion.hpp"
#include "revlex/graph.hpp"
#include "revlex/polytope.hpp"
#include "revlex/rational.hpp"

namespace revlex {

struct PyramidParams {
  int d_tilde = 0;
  Vertex n_tilde = 0;
};

/// d~ = min{ k : n - (d - k) <= 2^k } and n~ = n - (d - d~).
/// Throws AdmissibilityError unless d + 1 <= n <= 2^d.
PyramidParams pyramid_params(int d, Vertex n);

/// The (d - d~)-fold pyramid over P(n~), kept structurally. Vertices 0..n~-1 are the
/// base, vertex n~ + j - 1 is apex j.
class PyramidPolytope {
 public:
  PyramidPolytope(int d, Vertex n);

  int d() const noexcept { return d_; }
  Vertex n() const noexcept { return n_; }
  int d_tilde() const noexcept { return params_.d_tilde; }
  Vertex n_tilde() const noexcept { return params_.n_tilde; }
  int apex_count() const noexcept { return d_ - params_.d_tilde; }

  /// P(n~) in R^{d~}; absent when d~ = 0 (the base is a single point).
  const std::optional<RevlexPolytope>& base() const noexcept { return base_; }

  /// 0/1 coordinates in R^d: base vertices padded with zeros, apex j = u_{d~ + j - 1}.
  std::vector<BitVector01> embedding() const;

 private:
  int d_;
  Vertex n_;
  PyramidParams params_;
  std::optional<RevlexPolytope> base_;
};

std::int64_t pyramid_facet_count(int d, Vertex n);
BigInt pyramid_edge_count(int d, Vertex n);
Rational pyramid_average_degree(int d, Vertex n);

/// Base graph plus every apex joined to all earlier vertices.
PolytopeGraph build_pyramid_graph(int d, Vertex n, const GraphOptions& options = {});

/// build_mcf(n~) extended by routing every pair that involves an apex along its
/// direct arc.
FlowAssignment build_pyramid_mcf(int d, Vertex n, FlowBuilder& builder);

struct CertificateOptions {
  /// Base sizes up to this bound get their flow materialized; larger ones use the
  /// phi_max recurrence.
  Vertex materialize_max = 512;
};

ExpansionCertificate pyramid_expansion_certificate(int d, Vertex n, FlowBuilder& builder,
                                                   const CertificateOptions& options = {});
ExpansionCertificate pyramid_expansion_certificate(int d, Vertex n);

/// Checks f <= d + 2 log2(n) + slack exactly, i.e. 2^(f - d - slack) <= n^2.
bool within_log_facet_bound(std::int64_t facets, int d, Vertex n, int slack);

struct SweepRow {
  Vertex n = 0;
  int dim = 0;
  int d_tilde = 0;
  Vertex n_tilde = 0;
  std::int64_t num_facets = 0;
  BigInt num_edges;
  Rational avg_degree;
  Rational expansion_lb;
};

SweepRow sweep_row(int d, Vertex n, FlowBuilder& builder, const CertificateOptions& options);

enum class SweepRange { Admissible, FullDimensional };

/// Rows for every admissible n (or only 2^{d-1} < n <= 2^d), computed on worker
/// threads and returned in increasing n.
std::vector<SweepRow> sweep(int d, SweepRange range, const CertificateOptions& options = {});

inline constexpr const char* kSweepHeader =
    "n,dim,d_tilde,n_tilde,num_facets,num_edges,avg_degree_num,avg_degree_den,"
    "expansion_lb_num,expansion_lb_den";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace revlex
