#include <map>
#include <sstream>

#include <json.hpp>

#include "qsym/graph.hpp"
#include "qsym/group.hpp"
#include "qsym/io.hpp"

namespace qsym {

std::string write_dreadnaut(const ColoredGraph& graph) {
  std::ostringstream out;
  out << "n=" << graph.num_vertices() << " g\n";
  for (int v = 0; v < graph.num_vertices(); ++v) {
    out << v << ":";
    for (int u : graph.neighbours(v)) {
      if (u >= v) out << " " << u;
    }
    out << ";\n";
  }
  out << ".\n";
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < graph.num_vertices(); ++v) cells[graph.colour(v)].push_back(v);
  out << "f=[";
  bool first_cell = true;
  for (const auto& [colour, members] : cells) {
    if (!first_cell) out << "|";
    first_cell = false;
    for (std::size_t p = 0; p < members.size(); ++p) out << (p ? "," : "") << members[p];
  }
  out << "]\nx\n";
  return out.str();
}

std::string write_dot(const ColoredGraph& graph) {
  std::ostringstream out;
  out << "digraph G {\n";
  out << "  edge [dir=none];\n";
  out << "  node [style=filled, colorscheme=set312];\n";
  std::map<int, std::vector<int>> by_layer;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    by_layer[graph.origin(v).layer].push_back(v);
    std::string label = graph.label(v);
    std::string escaped;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') escaped += '\\';
      escaped += ch;
    }
    out << "  " << v << " [label=\"" << escaped << "\", fillcolor=" << (graph.colour(v) % 12 + 1) << ", class=\""
        << graph.colour_name(graph.colour(v)) << "\"];\n";
  }
  for (const auto& [layer, members] : by_layer) {
    out << "  { rank=same;";
    for (int v : members) out << " " << v << ";";
    out << " }  // layer " << layer << "\n";
  }
  for (const auto& [u, v] : graph.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_group_json(const DetectionResult& result, bool include_timings) {
  nlohmann::ordered_json j;
  j["representation"] = representation_name(result.representation);
  j["variables"] = result.names;
  j["generators"] = generator_strings(result.group, result.names);
  nlohmann::json orbit_list = nlohmann::json::array();
  for (const auto& orbit : result.orbits) {
    if (orbit.size() < 2) continue;
    nlohmann::json names = nlohmann::json::array();
    for (int v : orbit) names.push_back(result.names[static_cast<std::size_t>(v)]);
    orbit_list.push_back(names);
  }
  j["orbits"] = orbit_list;
  j["group_order"] = result.group.order().str();

  const auto all_names = result.problem.variable_names();
  const auto labels = result.problem.constraint_labels();
  nlohmann::ordered_json verification = nlohmann::ordered_json::array();
  for (const auto& e : result.verification.entries) {
    nlohmann::ordered_json entry;
    entry["generator"] = e.generator.to_cycle_string(all_names);
    entry["verified"] = e.sigma.has_value();
    if (e.sigma) {
      entry["sigma"] = e.sigma->to_cycle_string(labels);
    } else {
      entry["failure"] = e.failure;
    }
    verification.push_back(entry);
  }
  j["verification"] = verification;
  j["graph"] = {{"vertices", result.graph_vertices},
                {"edges", result.graph_edges},
                {"layers", result.graph_layers},
                {"colours", result.graph_colours},
                {"automorphism_group_order", result.graph_group_order.str()},
                {"search_nodes", result.search_nodes}};
  if (include_timings) j["timings_ms"] = {{"build", result.build_ms}, {"search", result.search_ms}};
  return j.dump(2) + "\n";
}

}  // namespace qsym
