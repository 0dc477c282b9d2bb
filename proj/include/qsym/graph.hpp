#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsym/permutation.hpp"

namespace qsym {

enum class OriginKind {
  Objective,   // equation 0
  Constraint,  // equation k >= 1 (index is the constraint position)
  Constant,    // the constant element of an encoding
  Variable,    // problem variable (auxiliaries included)
  Term,        // product term vertex of a tensor BLG
  Operator,    // expression DAG operator node
  Literal,     // expression DAG numeric leaf
};

// Where a vertex came from: `index` is the constraint or variable position
// (or a running id for Term/Operator/Literal), `layer` its copy layer.
struct VertexOrigin {
  OriginKind kind = OriginKind::Variable;
  int index = 0;
  int layer = 0;

  friend bool operator==(const VertexOrigin&, const VertexOrigin&) = default;
};

// Undirected vertex-coloured graph; loops allowed, no multi-edges. Colour
// classes are named so exports can label them.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Returns the colour id for `name`, creating it on first use. Ids follow
  // creation order.
  int colour_id(const std::string& name);

  int add_vertex(int colour, VertexOrigin origin = {});
  int add_vertex(const std::string& colour_name, VertexOrigin origin = {}) {
    return add_vertex(colour_id(colour_name), origin);
  }
  // Idempotent; u == v adds a loop.
  void add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(colour_.size()); }
  std::size_t num_edges() const { return num_edges_; }
  int num_colours() const { return static_cast<int>(colour_names_.size()); }

  int colour(int v) const { return colour_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& colours() const { return colour_; }
  const std::string& colour_name(int c) const { return colour_names_[static_cast<std::size_t>(c)]; }

  // Sorted; contains v itself when v has a loop.
  std::span<const int> neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  bool has_loop(int v) const { return has_edge(v, v); }

  const VertexOrigin& origin(int v) const { return origin_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexOrigin>& origins() const { return origin_; }

  // Display names (for DOT); defaults to the vertex id.
  void set_label(int v, std::string label);
  const std::string& label(int v) const { return label_[static_cast<std::size_t>(v)]; }

  // Edge list with u <= v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Colour-preserving and edge-preserving.
  bool is_automorphism(const Permutation& p) const;

  int layers = 1;  // number of copy layers the construction used

 private:
  std::vector<int> colour_;
  std::vector<VertexOrigin> origin_;
  std::vector<std::string> label_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> colour_names_;
  std::size_t num_edges_ = 0;
};

}  // namespace qsym
