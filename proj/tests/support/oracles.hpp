#pragma once

// Independent reference implementations for tests. Nothing here calls the
// library code it is used to check.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qsym/graph.hpp"
#include "qsym/io.hpp"
#include "qsym/model.hpp"
#include "qsym/permutation.hpp"

namespace oracle {

using qsym::Permutation;
using qsym::Problem;
using qsym::QuadForm;
using qsym::Rational;

inline std::string fixture(const std::string& name) { return std::string(QSYM_FIXTURES) + "/" + name; }

inline Problem load(const std::string& name) { return qsym::read_problem_file(fixture(name)); }

// Explicit closure of a generator list.
inline std::set<Permutation> closure(int degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        Permutation q = g * p;
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Every permutation of `n` points, in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

// x_i -> x_{perm(i)} applied term by term.
inline QuadForm substitute(const QuadForm& f, const Permutation& perm) {
  QuadForm out;
  for (const auto& [key, c] : f.quad) {
    int a = perm(key.first), b = perm(key.second);
    if (a > b) std::swap(a, b);
    out.quad[{a, b}] += c;
  }
  for (const auto& [i, c] : f.lin) out.lin[perm(i)] += c;
  out.constant = f.constant;
  return out;
}

inline bool same_variable_type(const Problem& p, int i, int j) {
  const auto& a = p.variables[static_cast<std::size_t>(i)];
  const auto& b = p.variables[static_cast<std::size_t>(j)];
  auto integral = [](const qsym::Variable& v) { return v.kind != qsym::VarKind::Continuous; };
  return integral(a) == integral(b) && a.lower == b.lower && a.upper == b.upper &&
         a.aux_origin.has_value() == b.aux_origin.has_value();
}

// Some sigma with substitute(c_k) == c_sigma(k) for all k, by backtracking
// over every constraint permutation consistent with the bodies.
inline std::optional<std::vector<int>> find_sigma(const Problem& p, const Permutation& perm) {
  const int m = p.num_constraints();
  std::vector<QuadForm> images;
  for (const auto& c : p.constraints) images.push_back(substitute(c.body, perm));
  std::vector<int> sigma(static_cast<std::size_t>(m), -1);
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::function<bool(int)> place = [&](int k) {
    if (k == m) return true;
    for (int l = 0; l < m; ++l) {
      if (used[static_cast<std::size_t>(l)]) continue;
      if (!(images[static_cast<std::size_t>(k)] == p.constraints[static_cast<std::size_t>(l)].body)) continue;
      used[static_cast<std::size_t>(l)] = 1;
      sigma[static_cast<std::size_t>(k)] = l;
      if (place(k + 1)) return true;
      used[static_cast<std::size_t>(l)] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return sigma;
}

// The formulation group by exhaustive search over variable permutations
// (normalized problem expected). Auxiliaries must keep their origin pairing.
inline std::set<Permutation> formulation_group(const Problem& p) {
  std::set<Permutation> out;
  const int n = p.num_variables();
  for (const auto& perm : all_permutations(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = same_variable_type(p, i, perm(i));
    if (!ok) continue;
    if (!(substitute(p.objective, perm) == p.objective)) continue;
    if (find_sigma(p, perm)) out.insert(perm);
  }
  return out;
}

// Generates problems with small integer coefficients on a shared box.
struct ProblemGenerator {
  std::mt19937 rng;
  explicit ProblemGenerator(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  QuadForm form(int n, int terms, bool quadratic) {
    QuadForm f;
    for (int t = 0; t < terms; ++t) {
      int c = uniform(-2, 2);
      if (c == 0) c = 1;
      const int i = uniform(0, n - 1);
      if (quadratic && uniform(0, 2) == 0) {
        int j = uniform(0, n - 1);
        f.add_quad(std::min(i, j), std::max(i, j), c);
      } else {
        f.add_lin(i, c);
      }
    }
    if (uniform(0, 1)) f.constant = uniform(-2, 2);
    return f;
  }

  // Symmetric by construction when `mirror` is set: the problem is closed
  // under swapping the two halves of the variables.
  Problem problem(int n, int m, bool binary, bool quadratic, bool mirror) {
    Problem p;
    for (int i = 0; i < n; ++i) {
      qsym::Variable v;
      v.name = "x" + std::to_string(i + 1);
      v.lower = 0;
      v.upper = 1;
      v.kind = binary ? qsym::VarKind::Binary : qsym::VarKind::Continuous;
      p.variables.push_back(v);
    }
    std::vector<int> swap(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) swap[static_cast<std::size_t>(i)] = (i < n / 2 * 2) ? (i ^ 1) : i;
    const Permutation mirror_perm(swap);
    QuadForm obj = form(n, uniform(1, 3), quadratic);
    if (mirror) obj.add(substitute(obj, mirror_perm));
    p.objective = obj;
    int k = 0;
    while (p.num_constraints() < m) {
      QuadForm body = form(n, uniform(1, 3), quadratic);
      // A lone last row is made invariant by itself.
      if (mirror && p.num_constraints() + 1 == m) body.add(substitute(body, mirror_perm));
      p.constraints.push_back({"c" + std::to_string(++k), body, qsym::Relation::LessEqual, 0});
      if (mirror && p.num_constraints() < m) {
        p.constraints.push_back({"c" + std::to_string(++k), substitute(body, mirror_perm), qsym::Relation::LessEqual, 0});
      }
    }
    return p;
  }
};

// Random vertex-coloured graph, optionally with loops.
inline qsym::ColoredGraph random_graph(std::mt19937& rng, int n, int colours, double density, bool loops) {
  qsym::ColoredGraph g;
  std::uniform_int_distribution<int> colour(0, colours - 1);
  std::bernoulli_distribution edge(density), loop(0.2);
  for (int c = 0; c < colours; ++c) g.colour_id("k" + std::to_string(c));
  for (int v = 0; v < n; ++v) g.add_vertex(colour(rng));
  for (int u = 0; u < n; ++u) {
    if (loops && loop(rng)) g.add_edge(u, u);
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Direct automorphism check from the edge list.
inline bool preserves(const qsym::ColoredGraph& g, const Permutation& p) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.colour(v) != g.colour(p(v))) return false;
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.insert(e);
  for (const auto& [u, v] : g.edges()) {
    int a = p(u), b = p(v);
    if (a > b) std::swap(a, b);
    if (!edges.count({a, b})) return false;
  }
  return true;
}

}  // namespace oracle
