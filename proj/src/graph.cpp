#include "qsym/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

int ColoredGraph::colour_id(const std::string& name) {
  const auto it = std::find(colour_names_.begin(), colour_names_.end(), name);
  if (it != colour_names_.end()) return static_cast<int>(it - colour_names_.begin());
  colour_names_.push_back(name);
  return static_cast<int>(colour_names_.size()) - 1;
}

int ColoredGraph::add_vertex(int colour, VertexOrigin origin) {
  if (colour < 0) throw std::invalid_argument("negative colour");
  while (colour >= num_colours()) colour_names_.push_back("colour" + std::to_string(num_colours()));
  const int id = num_vertices();
  colour_.push_back(colour);
  origin_.push_back(origin);
  label_.push_back(std::to_string(id));
  adjacency_.emplace_back();
  return id;
}

void ColoredGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  auto insert = [this](int a, int b) {
    auto& list = adjacency_[static_cast<std::size_t>(a)];
    const auto pos = std::lower_bound(list.begin(), list.end(), b);
    if (pos != list.end() && *pos == b) return false;
    list.insert(pos, b);
    return true;
  };
  if (insert(u, v)) {
    if (u != v) insert(v, u);
    ++num_edges_;
  }
}

bool ColoredGraph::has_edge(int u, int v) const {
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

void ColoredGraph::set_label(int v, std::string label) { label_[static_cast<std::size_t>(v)] = std::move(label); }

std::vector<std::pair<int, int>> ColoredGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(num_edges_);
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : neighbours(u)) {
      if (u <= v) result.emplace_back(u, v);
    }
  }
  return result;
}

bool ColoredGraph::is_automorphism(const Permutation& p) const {
  if (p.size() != num_vertices()) return false;
  for (int v = 0; v < num_vertices(); ++v) {
    if (colour(v) != colour(p(v))) return false;
    if (neighbours(v).size() != neighbours(p(v)).size()) return false;
  }
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : neighbours(u)) {
      if (u <= v && !has_edge(p(u), p(v))) return false;
    }
  }
  return true;
}

}  // namespace qsym
