#include "revlex/bounds.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "revlex/error.hpp"
#include "revlex/facets.hpp"

namespace revlex {

PyramidParams pyramid_params(int d, Vertex n) {
  check_dimension(d);
  if (n < static_cast<Vertex>(d) + 1 || n > pow2(d)) {
    throw AdmissibilityError("(d, n) = (" + std::to_string(d) + ", " + std::to_string(n) +
                             ") is not admissible: need d + 1 <= n <= 2^d");
  }
  for (int k = 0; k <= d; ++k) {
    const Vertex n_k = n - static_cast<Vertex>(d - k);
    if (n_k <= pow2(k)) return PyramidParams{k, n_k};
  }
  throw std::logic_error("pyramid_params: no base dimension found");
}

PyramidPolytope::PyramidPolytope(int d, Vertex n) : d_(d), n_(n), params_(pyramid_params(d, n)) {
  if (params_.d_tilde >= 1) base_ = RevlexPolytope::from_count(params_.n_tilde, params_.d_tilde);
}

std::vector<BitVector01> PyramidPolytope::embedding() const {
  std::vector<BitVector01> points;
  points.reserve(n_);
  for (Vertex x = 0; x < params_.n_tilde; ++x) points.emplace_back(x, d_);
  for (int j = 1; j <= apex_count(); ++j) points.push_back(unit_vector(params_.d_tilde + j - 1, d_));
  return points;
}

std::int64_t pyramid_facet_count(int d, Vertex n) {
  const PyramidPolytope pyramid(d, n);
  if (!pyramid.base()) return d + 1;
  return facet_count(*pyramid.base()) + pyramid.apex_count();
}

BigInt pyramid_edge_count(int d, Vertex n) {
  const PyramidPolytope pyramid(d, n);
  BigInt edges = pyramid.base() ? edge_count_formula(*pyramid.base()) : BigInt(0);
  // Apex i is joined to every earlier vertex.
  for (int i = 0; i < pyramid.apex_count(); ++i) {
    edges += BigInt(static_cast<unsigned long>(pyramid.n_tilde() + static_cast<Vertex>(i)));
  }
  return edges;
}

Rational pyramid_average_degree(int d, Vertex n) {
  Rational avg(2 * pyramid_edge_count(d, n), BigInt(static_cast<unsigned long>(n)));
  avg.canonicalize();
  return avg;
}

PolytopeGraph build_pyramid_graph(int d, Vertex n, const GraphOptions& options) {
  const PyramidPolytope pyramid(d, n);
  if (n > options.vertex_cap) throw CapabilityError("pyramid graph exceeds the vertex cap");
  std::vector<Edge> edges;
  if (pyramid.base()) edges = build_graph(*pyramid.base(), options).edges();
  for (Vertex apex = pyramid.n_tilde(); apex < n; ++apex) {
    for (Vertex y = 0; y < apex; ++y) edges.emplace_back(y, apex);
  }
  return PolytopeGraph::from_edges(n, std::move(edges));
}

FlowAssignment build_pyramid_mcf(int d, Vertex n, FlowBuilder& builder) {
  const PyramidPolytope pyramid(d, n);
  const Vertex n_tilde = pyramid.n_tilde();
  const auto& base = builder.build(n_tilde);
  std::vector<std::pair<Arc, Rational>> arcs(base.arcs().begin(), base.arcs().end());
  // Every pair with an apex endpoint ships its unit along the direct arc.
  for (Vertex apex = n_tilde; apex < n; ++apex) {
    for (Vertex y = 0; y < apex; ++y) {
      arcs.push_back({{apex, y}, Rational(1)});
      arcs.push_back({{y, apex}, Rational(1)});
    }
  }
  return FlowAssignment(n, std::move(arcs));
}

ExpansionCertificate pyramid_expansion_certificate(int d, Vertex n, FlowBuilder& builder,
                                                   const CertificateOptions& options) {
  const PyramidPolytope pyramid(d, n);
  const Vertex n_tilde = pyramid.n_tilde();
  Rational phi = 0;
  if (n_tilde >= 2) {
    phi = n_tilde <= options.materialize_max ? builder.build(n_tilde).phi_max()
                                             : phi_max_recurrence(n_tilde);
  }
  if (pyramid.apex_count() > 0) phi = std::max(phi, Rational(1));
  return make_certificate(n, phi, false);
}

ExpansionCertificate pyramid_expansion_certificate(int d, Vertex n) {
  FlowBuilder builder;
  return pyramid_expansion_certificate(d, n, builder);
}

bool within_log_facet_bound(std::int64_t facets, int d, Vertex n, int slack) {
  const std::int64_t exponent = facets - d - slack;
  if (exponent <= 0) return true;
  const BigInt count(static_cast<unsigned long>(n));
  return (BigInt(1) << static_cast<mp_bitcnt_t>(exponent)) <= count * count;
}

SweepRow sweep_row(int d, Vertex n, FlowBuilder& builder, const CertificateOptions& options) {
  const auto params = pyramid_params(d, n);
  SweepRow row;
  row.n = n;
  row.dim = d;
  row.d_tilde = params.d_tilde;
  row.n_tilde = params.n_tilde;
  row.num_facets = pyramid_facet_count(d, n);
  row.num_edges = pyramid_edge_count(d, n);
  row.avg_degree = Rational(2 * row.num_edges, BigInt(static_cast<unsigned long>(n)));
  row.avg_degree.canonicalize();
  row.expansion_lb = pyramid_expansion_certificate(d, n, builder, options).lower_bound;
  return row;
}

std::vector<SweepRow> sweep(int d, SweepRange range, const CertificateOptions& options) {
  check_dimension(d);
  const Vertex first = range == SweepRange::Admissible ? static_cast<Vertex>(d) + 1
                                                       : std::max<Vertex>(pow2(d - 1) + 1, d + 1);
  const Vertex last = pow2(d);
  if (first > last) return {};
  const std::size_t count = last - first + 1;

  std::vector<SweepRow> rows(count);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count / 64, 1));
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      FlowBuilder builder;
      for (std::size_t i = w; i < count; i += workers) {
        rows[i] = sweep_row(d, first + i, builder, options);
      }
    });
  }
  pool.clear();
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const auto& row : rows) {
    out << row.n << ',' << row.dim << ',' << row.d_tilde << ',' << row.n_tilde << ','
        << row.num_facets << ',' << row.num_edges.get_str() << ','
        << row.avg_degree.get_num().get_str() << ',' << row.avg_degree.get_den().get_str() << ','
        << row.expansion_lb.get_num().get_str() << ',' << row.expansion_lb.get_den().get_str()
        << '\n';
  }
}

}  // namespace revlex
