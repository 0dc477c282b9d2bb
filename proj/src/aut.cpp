#include "qsym/aut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

Coloring renumber(const std::vector<long long>& keys) {
  std::vector<long long> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out;
  out.num_cells = static_cast<int>(sorted.size());
  out.cell.reserve(keys.size());
  for (long long k : keys) {
    out.cell.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  }
  return out;
}

// First largest non-singleton cell, ties by lowest cell id.
int target_cell(const Coloring& coloring) {
  const auto sizes = coloring.cell_sizes();
  int best = -1;
  for (int c = 0; c < coloring.num_cells; ++c) {
    if (sizes[static_cast<std::size_t>(c)] > 1 &&
        (best < 0 || sizes[static_cast<std::size_t>(c)] > sizes[static_cast<std::size_t>(best)])) {
      best = c;
    }
  }
  return best;
}

std::vector<int> orbit_of(int point, const std::vector<Permutation>& gens, int degree) {
  std::vector<char> seen(static_cast<std::size_t>(degree), 0);
  std::vector<int> orbit{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : gens) {
      const int q = g(orbit[head]);
      if (!seen[static_cast<std::size_t>(q)]) {
        seen[static_cast<std::size_t>(q)] = 1;
        orbit.push_back(q);
      }
    }
  }
  return orbit;
}

class Search {
 public:
  explicit Search(const ColoredGraph& graph) : graph_(graph) {}

  AutomorphismResult run() {
    AutomorphismResult result;
    const int n = graph_.num_vertices();
    result.group = PermGroup(n);
    if (n == 0) return result;

    struct Level {
      Coloring partition;
      std::vector<int> candidates;
      int base_point;
    };
    std::vector<Level> path;
    Coloring current = refine(graph_, initial_coloring(graph_));
    ++nodes_;
    while (true) {
      first_sizes_.push_back(current.cell_sizes());
      const int target = target_cell(current);
      if (target < 0) break;
      auto members = current.members(target);
      const int base = members.front();
      Coloring next = refine(graph_, individualize(current, base));
      ++nodes_;
      path.push_back({std::move(current), std::move(members), base});
      current = std::move(next);
    }
    first_leaf_ = leaf_order(current);

    std::vector<Permutation> generators;
    for (std::size_t d = path.size(); d-- > 0;) {
      const Level& level = path[d];
      auto orbit = orbit_of(level.base_point, generators, n);
      for (int w : level.candidates) {
        if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
        found_.reset();
        if (explore(refine(graph_, individualize(level.partition, w)), d + 1)) {
          generators.push_back(*found_);
          orbit = orbit_of(level.base_point, generators, n);
        }
      }
      result.order *= static_cast<unsigned>(orbit.size());
    }
    result.group = PermGroup(n, generators);
    result.nodes = nodes_;
    return result;
  }

 private:
  static std::vector<int> leaf_order(const Coloring& leaf) {
    std::vector<int> at(leaf.cell.size());
    for (std::size_t v = 0; v < leaf.cell.size(); ++v) at[static_cast<std::size_t>(leaf.cell[v])] = static_cast<int>(v);
    return at;
  }

  // Depth-first search of the subtree rooted at `node` for a leaf whose
  // correspondence with the first leaf is an automorphism.
  bool explore(const Coloring& node, std::size_t depth) {
    ++nodes_;
    if (depth >= first_sizes_.size() || node.cell_sizes() != first_sizes_[depth]) return false;
    if (node.is_discrete()) {
      const auto order = leaf_order(node);
      std::vector<int> image(order.size());
      for (std::size_t c = 0; c < order.size(); ++c) image[static_cast<std::size_t>(first_leaf_[c])] = order[c];
      Permutation candidate(std::move(image));
      if (!graph_.is_automorphism(candidate)) return false;
      found_ = std::move(candidate);
      return true;
    }
    const int target = target_cell(node);
    for (int w : node.members(target)) {
      if (explore(refine(graph_, individualize(node, w)), depth + 1)) return true;
    }
    return false;
  }

  const ColoredGraph& graph_;
  std::vector<std::vector<int>> first_sizes_;
  std::vector<int> first_leaf_;
  std::optional<Permutation> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<int> Coloring::cell_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(num_cells), 0);
  for (int c : cell) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

std::vector<int> Coloring::members(int c) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < cell.size(); ++v) {
    if (cell[v] == c) out.push_back(static_cast<int>(v));
  }
  return out;
}

Coloring initial_coloring(const ColoredGraph& graph) {
  std::vector<long long> keys(graph.colours().begin(), graph.colours().end());
  return renumber(keys);
}

Coloring refine(const ColoredGraph& graph, const Coloring& coloring) {
  Coloring current = coloring;
  const int n = graph.num_vertices();
  while (true) {
    // Signature: own cell, then the sorted (neighbour cell, count) list.
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> cells;
      for (int u : graph.neighbours(v)) cells.push_back(current.cell[static_cast<std::size_t>(u)]);
      std::sort(cells.begin(), cells.end());
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(current.cell[static_cast<std::size_t>(v)]);
      for (std::size_t i = 0; i < cells.size();) {
        std::size_t j = i;
        while (j < cells.size() && cells[j] == cells[i]) ++j;
        sig.push_back(cells[i]);
        sig.push_back(static_cast<int>(j - i));
        i = j;
      }
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& sig : signature) ids.emplace(sig, 0);
    if (static_cast<int>(ids.size()) == current.num_cells) return current;
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    Coloring refined;
    refined.num_cells = next;
    refined.cell.reserve(static_cast<std::size_t>(n));
    for (const auto& sig : signature) refined.cell.push_back(ids.at(sig));
    current = std::move(refined);
  }
}

Coloring individualize(const Coloring& coloring, int v) {
  std::vector<long long> keys;
  keys.reserve(coloring.cell.size());
  for (std::size_t u = 0; u < coloring.cell.size(); ++u) {
    keys.push_back(2LL * coloring.cell[u] + (static_cast<int>(u) == v ? 0 : 1));
  }
  return renumber(keys);
}

AutomorphismResult automorphism_group(const ColoredGraph& graph) { return Search(graph).run(); }

AutomorphismResult brute_force_automorphisms(const ColoredGraph& graph) {
  const int n = graph.num_vertices();
  if (n > 10) throw PreconditionError("brute-force automorphism search is limited to 10 vertices");
  std::vector<Permutation> found;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::size_t nodes = 0;

  auto extend = [&](auto&& self, int v) -> void {
    ++nodes;
    if (v == n) {
      found.emplace_back(image);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || graph.colour(c) != graph.colour(v)) continue;
      if (graph.has_loop(c) != graph.has_loop(v)) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u) {
        consistent = graph.has_edge(u, v) == graph.has_edge(image[static_cast<std::size_t>(u)], c);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      self(self, v + 1);
      used[static_cast<std::size_t>(c)] = 0;
    }
    image[static_cast<std::size_t>(v)] = -1;
  };
  extend(extend, 0);

  AutomorphismResult result;
  result.order = static_cast<unsigned>(found.size());
  result.group = PermGroup(n, found);
  result.nodes = nodes;
  return result;
}

std::vector<std::vector<int>> orbits(const PermGroup& group, std::span<const int> subset) {
  std::vector<char> wanted(static_cast<std::size_t>(group.degree()), 0);
  for (int v : subset) wanted.at(static_cast<std::size_t>(v)) = 1;
  std::vector<std::vector<int>> result;
  for (const auto& orbit : group.orbits()) {
    std::vector<int> kept;
    for (int v : orbit) {
      if (wanted[static_cast<std::size_t>(v)]) kept.push_back(v);
    }
    if (!kept.empty()) result.push_back(std::move(kept));
  }
  return result;
}

}  // namespace qsym
