#include "qsym/group.hpp"

#include <chrono>
#include <set>

#include "qsym/blg.hpp"
#include "qsym/dag.hpp"
#include "qsym/encode.hpp"
#include "qsym/errors.hpp"
#include "qsym/relax.hpp"

namespace qsym {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Problem prepared(const Problem& problem, Representation rep) {
  Problem normalized = normalize(problem);
  if (rep == Representation::BlgFlat && !normalized.is_linear()) return mccormick_relax(normalized).base;
  return normalized;
}

ColoredGraph graph_of(const Problem& normalized, Representation rep) {
  switch (rep) {
    case Representation::BlgTensor:
      return build_blg_tensor(tensor_encode(normalized));
    case Representation::BlgFlat:
      return build_blg_flat(flat_encode(normalized));
    case Representation::Dag:
      return build_dag(normalized);
  }
  throw InternalError("unknown representation");
}

}  // namespace

PermGroup project_to_variables(const PermGroup& graph_group, const ColoredGraph& graph, int num_variables) {
  std::vector<int> vertex_of(static_cast<std::size_t>(num_variables), -1);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const auto& o = graph.origin(v);
    if (o.kind == OriginKind::Variable && vertex_of.at(static_cast<std::size_t>(o.index)) < 0) {
      vertex_of[static_cast<std::size_t>(o.index)] = v;
    }
  }
  for (int i = 0; i < num_variables; ++i) {
    if (vertex_of[static_cast<std::size_t>(i)] < 0) throw InternalError("graph has no vertex for variable " + std::to_string(i));
  }
  PermGroup projected(num_variables);
  for (const auto& g : graph_group.generators()) {
    std::vector<int> image(static_cast<std::size_t>(num_variables));
    for (int i = 0; i < num_variables; ++i) {
      const int w = g(vertex_of[static_cast<std::size_t>(i)]);
      const auto& o = graph.origin(w);
      if (o.kind != OriginKind::Variable || vertex_of[static_cast<std::size_t>(o.index)] != w) {
        throw InternalError("automorphism sends a variable vertex to a non-variable vertex");
      }
      image[static_cast<std::size_t>(i)] = o.index;
    }
    projected.add_generator(Permutation(std::move(image)));
  }
  return projected;
}

PermGroup restrict_to_prefix(const PermGroup& group, int count) {
  PermGroup out(count);
  for (const auto& g : group.generators()) {
    std::vector<int> image(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      if (g(i) >= count) throw InternalError("generator mixes original and auxiliary variables");
      image[static_cast<std::size_t>(i)] = g(i);
    }
    out.add_generator(Permutation(std::move(image)));
  }
  return out;
}

bool VerificationReport::all_verified() const {
  for (const auto& e : entries) {
    if (!e.sigma) return false;
  }
  return true;
}

VerificationReport verify_formulation_group(const Problem& problem, const std::vector<Permutation>& generators) {
  VerificationReport report;
  for (const auto& g : generators) {
    auto match = match_constraints(problem, g);
    report.entries.push_back({g, std::move(match.sigma), std::move(match.failure)});
  }
  return report;
}

const char* representation_name(Representation rep) {
  switch (rep) {
    case Representation::BlgTensor:
      return "blg2";
    case Representation::BlgFlat:
      return "blg1";
    case Representation::Dag:
      return "dag";
  }
  return "?";
}

Representation parse_representation(const std::string& text) {
  if (text == "blg2") return Representation::BlgTensor;
  if (text == "blg1") return Representation::BlgFlat;
  if (text == "dag") return Representation::Dag;
  throw PreconditionError("unknown representation '" + text + "' (expected blg1, blg2 or dag)");
}

ColoredGraph representation_graph(const Problem& problem, Representation rep) {
  return graph_of(prepared(problem, rep), rep);
}

DetectionResult detect(const Problem& problem, Representation rep, const DetectOptions& options) {
  DetectionResult result;
  result.representation = rep;
  result.original_variables = problem.num_variables();

  auto start = Clock::now();
  result.problem = prepared(problem, rep);
  const ColoredGraph graph = graph_of(result.problem, rep);
  result.build_ms = ms_since(start);
  result.graph_vertices = static_cast<std::size_t>(graph.num_vertices());
  result.graph_edges = graph.num_edges();
  result.graph_layers = graph.layers;
  result.graph_colours = graph.num_colours();

  start = Clock::now();
  const auto aut = automorphism_group(graph);
  result.search_ms = ms_since(start);
  result.graph_group_order = aut.order;
  result.search_nodes = aut.nodes;
  for (const auto& g : aut.group.generators()) {
    if (!graph.is_automorphism(g)) throw InternalError("search produced a non-automorphism");
  }

  const PermGroup full = project_to_variables(aut.group, graph, result.problem.num_variables());
  result.verification = verify_formulation_group(result.problem, full.generators());
  auto names = result.problem.variable_names();
  if (options.original_variables_only && result.original_variables < result.problem.num_variables()) {
    result.group = restrict_to_prefix(full, result.original_variables);
    names.resize(static_cast<std::size_t>(result.original_variables));
  } else {
    result.group = full;
  }
  result.names = std::move(names);
  std::vector<int> all(static_cast<std::size_t>(result.group.degree()));
  for (int i = 0; i < result.group.degree(); ++i) all[static_cast<std::size_t>(i)] = i;
  result.orbits = orbits(result.group, all);
  return result;
}

std::vector<std::string> generator_strings(const PermGroup& group, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& g : group.generators()) out.push_back(g.to_cycle_string(names));
  return out;
}

std::string orbit_string(const std::vector<std::vector<int>>& orbits, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& orbit : orbits) {
    if (orbit.size() < 2) continue;
    if (!out.empty()) out += ",";
    out += "{";
    for (std::size_t p = 0; p < orbit.size(); ++p) {
      if (p) out += ",";
      out += names[static_cast<std::size_t>(orbit[p])];
    }
    out += "}";
  }
  return out;
}

ComparisonReport compare_representations(const Problem& problem) {
  ComparisonReport report;
  if (problem.num_variables() == 0) return report;
  const DetectOptions originals{true};
  for (auto rep : {Representation::BlgTensor, Representation::BlgFlat, Representation::Dag}) {
    const auto result = detect(problem, rep, originals);
    report.rows.push_back({rep, result.graph_vertices, result.graph_edges, result.group});
    if (report.names.empty()) report.names = result.names;
  }
  for (const auto& row : report.rows) {
    if (!row.group.same_group(report.rows.front().group)) report.groups_agree = false;
  }
  return report;
}

}  // namespace qsym
