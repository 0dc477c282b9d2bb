#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsym/aut.hpp"
#include "qsym/graph.hpp"
#include "qsym/model.hpp"
#include "qsym/perm_group.hpp"

namespace qsym {

// Restricts each generator to the first vertex of each variable (its base
// copy) and re-indexes by variable. Identity and duplicate restrictions are dropped. Throws
// InternalError if a variable vertex is sent to any other kind of vertex.
PermGroup project_to_variables(const PermGroup& graph_group, const ColoredGraph& graph, int num_variables);

// Keeps the action on the first `count` points; each generator must leave
// that prefix invariant (InternalError otherwise).
PermGroup restrict_to_prefix(const PermGroup& group, int count);

struct VerificationEntry {
  Permutation generator;
  std::optional<Permutation> sigma;  // constraint permutation witness
  std::string failure;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;
  bool all_verified() const;
};

VerificationReport verify_formulation_group(const Problem& problem, const std::vector<Permutation>& generators);

enum class Representation { BlgTensor, BlgFlat, Dag };
const char* representation_name(Representation rep);  // "blg2", "blg1", "dag"
Representation parse_representation(const std::string& text);  // throws PreconditionError

struct DetectOptions {
  bool original_variables_only = false;
};

struct DetectionResult {
  Representation representation = Representation::BlgTensor;
  Problem problem;                 // normalized, relaxed for blg1 when needed
  int original_variables = 0;      // leading variables that came from the input
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;
  int graph_layers = 0;
  int graph_colours = 0;
  BigInt graph_group_order = 1;
  std::size_t search_nodes = 0;
  PermGroup group;                 // on the reported variables
  std::vector<std::string> names;  // names of the reported variables
  std::vector<std::vector<int>> orbits;
  VerificationReport verification;
  double build_ms = 0;
  double search_ms = 0;
};

// Normalizes, builds the chosen graph, computes its automorphisms, projects
// them to variables and verifies every generator. blg1 relaxes quadratic
// input first.
DetectionResult detect(const Problem& problem, Representation rep, const DetectOptions& options = {});

// Builds the graph detect would use for `rep` (after the same preprocessing).
ColoredGraph representation_graph(const Problem& problem, Representation rep);

// "(x1 x4)(x2 x3)" for each generator; "{x1,x4},{x2,x3}" for orbits.
std::vector<std::string> generator_strings(const PermGroup& group, const std::vector<std::string>& names);
std::string orbit_string(const std::vector<std::vector<int>>& orbits, const std::vector<std::string>& names);

struct RepresentationRow {
  Representation representation;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  PermGroup group;  // on the original variables
};

struct ComparisonReport {
  std::vector<RepresentationRow> rows;
  std::vector<std::string> names;  // original variable names
  bool groups_agree = true;
};

// Sizes and projected groups of blg2, blg1 (after relaxation) and the DAG,
// compared on the original variables. Empty for a problem with no variables.
ComparisonReport compare_representations(const Problem& problem);

}  // namespace qsym
