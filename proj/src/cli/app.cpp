#include "revlex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "revlex/bounds.hpp"
#include "revlex/error.hpp"
#include "revlex/expansion.hpp"
#include "revlex/facets.hpp"
#include "revlex/graph.hpp"
#include "revlex/oracle.hpp"
#include "revlex/polytope.hpp"
#include "revlex/verify.hpp"

namespace revlex::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct Formatter {
  std::optional<int> decimals;

  std::string operator()(const Rational& value) const {
    return decimals ? to_decimal(value, *decimals) : to_string(value);
  }
};

// --n / --v pair shared by the polytope subcommands.
struct PolytopeArgs {
  std::optional<Vertex> n;
  std::optional<std::string> v;

  void attach(CLI::App& sub) {
    auto* n_opt = sub.add_option("--n", n, "vertex count; the ambient dimension is minimal");
    auto* v_opt = sub.add_option("--v", v, "spec vector as a bit string, x_0 first");
    n_opt->excludes(v_opt);
  }

  RevlexPolytope build() const {
    if (v) return RevlexPolytope::from_spec(BitVector01::parse(*v));
    if (n) return RevlexPolytope::from_count(*n);
    throw InputError("one of --n or --v is required");
  }
};

std::string join(std::span<const int> values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(values[i]);
  }
  return s + "]";
}

std::optional<std::int64_t> projected_facet_count(const RevlexPolytope& polytope) {
  const auto projected = project_to_affine_hull(polytope);
  if (projected.dim() < 1) return std::nullopt;
  return facet_count(projected);
}

void describe(const RevlexPolytope& p, bool as_json, const Formatter& fmt, std::ostream& out) {
  const auto facets = projected_facet_count(p);
  const auto edges = edge_count_formula(p);
  const auto avg = average_degree(p);
  if (as_json) {
    json j = to_json(p);
    j["num_facets"] = facets ? json(*facets) : json(nullptr);
    j["num_edges"] = to_string(edges);
    j["avg_degree"] = fmt(avg);
    out << j.dump(2) << '\n';
    return;
  }
  const auto spec = p.spec();
  out << "n: " << p.n() << '\n'
      << "ambient dimension: " << p.d() << '\n'
      << "dimension: " << p.dim() << '\n'
      << "spec: " << (spec ? spec->to_string() : std::string("none (full cube)")) << '\n'
      << "signature: " << join(p.signature()) << '\n'
      << "blocks:";
  for (const auto& block : p.blocks()) out << " [" << block.first << ',' << block.first + block.size() << ')';
  out << '\n'
      << "facets: " << (facets ? std::to_string(*facets) : std::string("n/a")) << '\n'
      << "edges: " << to_string(edges) << '\n'
      << "average degree: " << fmt(avg) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Revlex-initial 0/1-polytopes: facets, graphs, optimization and expansion"};
  app.name("revlex");
  app.require_subcommand(1);

  Formatter fmt;
  app.add_option("--decimal", fmt.decimals, "render rationals as decimals with k digits")
      ->check(CLI::Range(0, 60));

  PolytopeArgs describe_args;
  bool describe_json = false;
  auto* describe_cmd = app.add_subcommand("describe", "dimension, signature, blocks, facet and edge counts");
  describe_args.attach(*describe_cmd);
  describe_cmd->add_flag("--json", describe_json);

  PolytopeArgs facet_args;
  bool full = false;
  bool minimal = false;
  bool project = false;
  std::string facet_format = "text";
  auto* facets_cmd = app.add_subcommand("facets", "linear description");
  facet_args.attach(*facets_cmd);
  auto* full_flag = facets_cmd->add_flag("--full", full, "bounds, covers and the full-support row");
  facets_cmd->add_flag("--minimal", minimal, "facet-defining rows only (default)")->excludes(full_flag);
  facets_cmd->add_flag("--project", project, "work in the affine hull for lower-dimensional polytopes");
  facets_cmd->add_option("--format", facet_format)->check(CLI::IsMember({"text", "json"}));

  PolytopeArgs graph_args;
  std::string graph_format = "edgelist";
  auto* graph_cmd = app.add_subcommand("graph", "polytope graph");
  graph_args.attach(*graph_cmd);
  graph_cmd->add_option("--format", graph_format)->check(CLI::IsMember({"edgelist", "dot", "json"}));

  PolytopeArgs max_args;
  std::string objective;
  bool max_json = false;
  auto* max_cmd = app.add_subcommand("maximize", "maximize a linear objective over the vertices");
  max_args.attach(*max_cmd);
  max_cmd->add_option("--c", objective, "comma-separated rationals c_0,...,c_{d-1}")->required();
  max_cmd->add_flag("--json", max_json);

  Vertex exp_n = 0;
  bool exact = false;
  bool audit = false;
  bool exp_json = false;
  auto* exp_cmd = app.add_subcommand("expansion", "multi-commodity flow certificate");
  exp_cmd->add_option("--n", exp_n)->required()->check(CLI::Range(Vertex{2}, pow2(kMaxDimension)));
  exp_cmd->add_flag("--exact", exact, "also compute the exact expansion (n <= 22)");
  exp_cmd->add_flag("--audit", audit, "re-derive and check every pair flow (n <= 64)");
  exp_cmd->add_flag("--json", exp_json);

  int pyr_d = 0;
  Vertex pyr_n = 0;
  bool pyr_json = false;
  auto* pyr_cmd = app.add_subcommand("pyramid", "the pyramid polytope P(d, n)");
  pyr_cmd->add_option("--d", pyr_d)->required();
  pyr_cmd->add_option("--n", pyr_n)->required();
  pyr_cmd->add_flag("--json", pyr_json);

  int sweep_d = 0;
  std::string sweep_out;
  Vertex materialize_max = CertificateOptions{}.materialize_max;
  std::string sweep_range = "admissible";
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV of pyramid statistics over n");
  sweep_cmd->add_option("--d", sweep_d)->required();
  sweep_cmd->add_option("--out", sweep_out)->required();
  sweep_cmd->add_option("--exact-expansion-max", materialize_max,
                        "materialize flows for bases up to this size");
  sweep_cmd->add_option("--range", sweep_range)->check(CLI::IsMember({"admissible", "full-dim"}));

  int verify_d = 0;
  Vertex verify_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check every invariant against the brute-force oracles");
  verify_cmd->add_option("--max-d", verify_d)->required()->check(CLI::Range(1, kMaxDimension));
  verify_cmd->add_option("--max-n", verify_n);

  std::vector<std::string> argv_storage{"revlex"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*describe_cmd) {
      describe(describe_args.build(), describe_json, fmt, out);
    } else if (*facets_cmd) {
      auto polytope = facet_args.build();
      if (project) polytope = project_to_affine_hull(polytope);
      const auto rows = full ? full_description(polytope) : minimal_description(polytope);
      if (facet_format == "json") {
        json j{{"n", polytope.n()}, {"d", polytope.d()}, {"description", full ? "full" : "minimal"},
               {"rows", to_json(rows)}};
        out << j.dump(2) << '\n';
      } else {
        for (const auto& row : rows) out << row.to_text() << '\n';
      }
    } else if (*graph_cmd) {
      const auto polytope = graph_args.build();
      const auto graph = build_graph(polytope);
      if (graph_format == "dot") {
        write_dot(out, graph, "P" + std::to_string(polytope.n()));
      } else if (graph_format == "json") {
        out << to_json(graph).dump() << '\n';
      } else {
        write_edge_list(out, graph);
      }
    } else if (*max_cmd) {
      const auto polytope = max_args.build();
      const auto c = parse_rational_list(objective);
      const auto best = maximize(polytope, c);
      if (max_json) {
        out << ordered_json{{"value", fmt(best.value)}, {"argmax", best.argmax.to_string()},
                    {"argmax_index", best.argmax.bits()}}
                   .dump(2)
            << '\n';
      } else {
        out << "value: " << fmt(best.value) << '\n'
            << "argmax: " << best.argmax.to_string() << '\n'
            << "argmax index: " << best.argmax.bits() << '\n';
      }
    } else if (*exp_cmd) {
      const auto cert = certify_expansion(exp_n, audit);
      std::optional<oracle::ExpansionResult> brute;
      if (exact) brute = oracle::brute_expansion(build_graph(RevlexPolytope::from_count(exp_n)));
      if (exp_json) {
        ordered_json j{{"n", exp_n},
                       {"phi_max", fmt(cert.phi_max)},
                       {"lower_bound", fmt(cert.lower_bound)},
                       {"exact", brute ? ordered_json(fmt(brute->value)) : ordered_json(nullptr)},
                       {"audited", cert.audited}};
        out << j.dump(2) << '\n';
      } else {
        out << "n: " << exp_n << '\n'
            << "phi_max: " << fmt(cert.phi_max) << '\n'
            << "lower bound: " << fmt(cert.lower_bound) << '\n';
        if (brute) out << "exact: " << fmt(brute->value) << '\n';
        if (cert.audited) out << "pair flows: audited\n";
      }
    } else if (*pyr_cmd) {
      const PyramidPolytope pyramid(pyr_d, pyr_n);
      const auto cert = pyramid_expansion_certificate(pyr_d, pyr_n);
      const auto facets = pyramid_facet_count(pyr_d, pyr_n);
      const auto edges = pyramid_edge_count(pyr_d, pyr_n);
      const auto avg = pyramid_average_degree(pyr_d, pyr_n);
      if (pyr_json) {
        ordered_json j{{"d", pyr_d},
                       {"n", pyr_n},
                       {"d_tilde", pyramid.d_tilde()},
                       {"n_tilde", pyramid.n_tilde()},
                       {"apex_count", pyramid.apex_count()},
                       {"num_facets", facets},
                       {"num_edges", to_string(edges)},
                       {"avg_degree", fmt(avg)},
                       {"phi_max", fmt(cert.phi_max)},
                       {"expansion_lb", fmt(cert.lower_bound)}};
        out << j.dump(2) << '\n';
      } else {
        out << "d: " << pyr_d << '\n'
            << "n: " << pyr_n << '\n'
            << "base: P(" << pyramid.n_tilde() << ") in dimension " << pyramid.d_tilde() << '\n'
            << "apexes: " << pyramid.apex_count() << '\n'
            << "facets: " << facets << '\n'
            << "edges: " << to_string(edges) << '\n'
            << "average degree: " << fmt(avg) << '\n'
            << "phi_max: " << fmt(cert.phi_max) << '\n'
            << "expansion lower bound: " << fmt(cert.lower_bound) << '\n';
      }
    } else if (*sweep_cmd) {
      CertificateOptions options;
      options.materialize_max = materialize_max;
      const auto range = sweep_range == "full-dim" ? SweepRange::FullDimensional : SweepRange::Admissible;
      const auto rows = sweep(sweep_d, range, options);
      std::ofstream file(sweep_out);
      if (!file) throw InputError("cannot open " + sweep_out + " for writing");
      write_sweep_csv(file, rows);
      if (!file.flush()) throw InputError("failed writing " + sweep_out);
      out << "wrote " << rows.size() << " rows to " << sweep_out << '\n';
    } else if (*verify_cmd) {
      verify::SuiteOptions options;
      options.max_d = verify_d;
      options.max_n = verify_n;
      bool ok = true;
      for (const auto& result : verify::run_suite(options)) {
        out << (result.ok ? "ok   " : "FAIL ") << result.name << " (" << result.cases << " cases)";
        if (!result.ok) out << ": " << result.failure;
        out << '\n';
        ok = ok && result.ok;
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace revlex::cli
