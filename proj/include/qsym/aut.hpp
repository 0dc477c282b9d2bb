#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qsym/graph.hpp"
#include "qsym/perm_group.hpp"

namespace qsym {

// An ordered vertex partition: cell[v] in 0..num_cells-1.
struct Coloring {
  std::vector<int> cell;
  int num_cells = 0;

  bool is_discrete() const { return num_cells == static_cast<int>(cell.size()); }
  std::vector<int> cell_sizes() const;
  std::vector<int> members(int c) const;  // sorted

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Cells follow ascending colour id.
Coloring initial_coloring(const ColoredGraph& graph);

// Coarsest equitable refinement. Cells only split; a split cell's pieces are
// ordered by their (neighbour cell, count) signatures, so numbering commutes
// with graph isomorphisms.
Coloring refine(const ColoredGraph& graph, const Coloring& coloring);

// Moves v into a singleton cell placed directly before the rest of its cell.
Coloring individualize(const Coloring& coloring, int v);

struct AutomorphismResult {
  PermGroup group;
  BigInt order = 1;
  std::size_t nodes = 0;  // search-tree nodes visited
};

// Colour-preserving automorphism group by individualization-refinement.
// Generators are deterministic for a given graph; the order is the product
// of the base-point orbit lengths along the first path.
AutomorphismResult automorphism_group(const ColoredGraph& graph);

// Test oracle: every automorphism by exhaustive enumeration. The group's
// generators are all non-identity elements. At most 10 vertices.
AutomorphismResult brute_force_automorphisms(const ColoredGraph& graph);

// Orbits of `group` met with `subset`; each sorted, ordered by first point.
std::vector<std::vector<int>> orbits(const PermGroup& group, std::span<const int> subset);

}  // namespace qsym
