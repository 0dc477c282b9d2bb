#include "qsym/relax.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

std::string aux_name(const Problem& problem, int i, int j) {
  const bool short_form = problem.num_variables() <= 9;
  std::string name = "X" + std::to_string(i + 1) + (short_form ? "" : "_") + std::to_string(j + 1);
  while (problem.find_variable(name) >= 0) name += "_";
  return name;
}

std::string row_label(const Problem& problem, int k) {
  std::string label = "c" + std::to_string(k);
  const auto labels = problem.constraint_labels();
  if (std::find(labels.begin(), labels.end(), label) == labels.end()) return label;
  label = "r" + std::to_string(k);
  while (std::find(labels.begin(), labels.end(), label) != labels.end()) label += "_";
  return label;
}

// Monomials in order of first appearance: objective, then constraints.
std::vector<std::pair<int, int>> monomials_in_order(const Problem& problem) {
  std::vector<std::pair<int, int>> order;
  std::set<std::pair<int, int>> seen;
  auto scan = [&](const QuadForm& form) {
    for (const auto& [key, coef] : form.quad) {
      if (seen.insert(key).second) order.push_back(key);
    }
  };
  scan(problem.objective);
  for (const auto& c : problem.constraints) scan(c.body);
  return order;
}

QuadForm substitute(const QuadForm& form, const std::map<std::pair<int, int>, int>& aux_of) {
  QuadForm out;
  for (const auto& [key, coef] : form.quad) {
    auto it = aux_of.find(key);
    if (it == aux_of.end()) {
      out.add_quad(key.first, key.second, coef);
    } else {
      out.add_lin(it->second, coef);
    }
  }
  for (const auto& [i, coef] : form.lin) out.add_lin(i, coef);
  out.constant = form.constant;
  return out;
}

void corner_bounds(const Variable& xi, const Variable& xj, Variable& aux) {
  const std::array<Rational, 4> corners{xi.lo() * xj.lo(), xi.lo() * xj.hi(), xi.hi() * xj.lo(), xi.hi() * xj.hi()};
  aux.lower = *std::min_element(corners.begin(), corners.end());
  aux.upper = *std::max_element(corners.begin(), corners.end());
}

LinearizedProblem linearize(const Problem& input, const std::vector<std::pair<int, int>>& selected) {
  const Problem problem = normalize(input);
  const int n = problem.num_variables();

  std::vector<std::pair<int, int>> sorted = selected;
  std::sort(sorted.begin(), sorted.end());
  LinearizedProblem out;
  out.base.sense = problem.sense;
  out.base.variables = problem.variables;
  std::map<std::pair<int, int>, int> aux_of;
  for (const auto& [i, j] : sorted) {
    Variable aux;
    aux.name = aux_name(out.base, i, j);
    aux.kind = VarKind::Continuous;
    aux.aux_origin = std::pair{i, j};
    corner_bounds(problem.variables[static_cast<std::size_t>(i)], problem.variables[static_cast<std::size_t>(j)], aux);
    const int index = n + static_cast<int>(out.aux.size());
    aux_of[{i, j}] = index;
    out.aux.push_back({index, {i, j}, aux.name});
    out.base.variables.push_back(std::move(aux));
  }

  out.base.objective = substitute(problem.objective, aux_of);
  std::unordered_set<std::string> emitted;
  for (const auto& c : problem.constraints) {
    out.base.constraints.push_back({c.label, substitute(c.body, aux_of), Relation::LessEqual, 0});
    emitted.insert(canonical_key(out.base.constraints.back().body));
  }
  out.rlt_begin = out.base.num_constraints();

  // Envelope rows follow the order in which monomials first appear.
  std::set<std::pair<int, int>> wanted(sorted.begin(), sorted.end());
  for (const auto& key : monomials_in_order(problem)) {
    if (!wanted.count(key)) continue;
    const auto [i, j] = key;
    const int x = aux_of.at(key);
    Variable& aux = out.base.variables[static_cast<std::size_t>(x)];
    const auto rows = mccormick_envelope(problem.variables[static_cast<std::size_t>(i)],
                                         problem.variables[static_cast<std::size_t>(j)], i, j, x);
    for (const auto& row : rows) {
      if (row.lin.size() == 1 && row.lin.begin()->first == x && row.quad.empty()) {
        // a X + c <= 0
        const Rational& a = row.lin.begin()->second;
        const Rational limit = -row.constant / a;
        if (a > 0) {
          aux.upper = std::min(*aux.upper, limit);
        } else {
          aux.lower = std::max(*aux.lower, limit);
        }
        continue;
      }
      if (row.lin.empty() && row.quad.empty() && row.constant <= 0) continue;
      if (!emitted.insert(canonical_key(row)).second) continue;
      const int k = out.base.num_constraints() + 1;
      out.base.constraints.push_back({row_label(out.base, k), row, Relation::LessEqual, 0});
    }
  }
  out.rlt_end = out.base.num_constraints();
  return out;
}

}  // namespace

std::array<QuadForm, 4> mccormick_envelope(const Variable& xi, const Variable& xj, int i, int j, int aux) {
  const Rational &li = xi.lo(), &ui = xi.hi(), &lj = xj.lo(), &uj = xj.hi();
  std::array<QuadForm, 4> rows;
  // X >= li xj + lj xi - li lj
  rows[0].add_lin(j, li);
  rows[0].add_lin(i, lj);
  rows[0].constant = -li * lj;
  rows[0].add_lin(aux, -1);
  // X >= ui xj + uj xi - ui uj
  rows[1].add_lin(j, ui);
  rows[1].add_lin(i, uj);
  rows[1].constant = -ui * uj;
  rows[1].add_lin(aux, -1);
  // X <= uj xi + li xj - li uj
  rows[2].add_lin(aux, 1);
  rows[2].add_lin(i, -uj);
  rows[2].add_lin(j, -li);
  rows[2].constant = li * uj;
  // X <= ui xj + lj xi - ui lj
  rows[3].add_lin(aux, 1);
  rows[3].add_lin(j, -ui);
  rows[3].add_lin(i, -lj);
  rows[3].constant = ui * lj;
  return rows;
}

LinearizedProblem mccormick_relax(const Problem& problem) {
  const Problem normalized = normalize(problem);
  return linearize(normalized, monomials_in_order(normalized));
}

LinearizedProblem relax_subset(const Problem& problem, const std::vector<std::pair<int, int>>& monomials) {
  const Problem normalized = normalize(problem);
  const auto present = monomials_in_order(normalized);
  std::vector<std::pair<int, int>> selected;
  for (auto [i, j] : monomials) {
    if (i > j) std::swap(i, j);
    if (std::find(present.begin(), present.end(), std::pair{i, j}) == present.end()) {
      const auto names = normalized.variable_names();
      auto name_of = [&](int v) {
        return v >= 0 && v < normalized.num_variables() ? names[static_cast<std::size_t>(v)] : "#" + std::to_string(v);
      };
      throw PreconditionError("monomial " + name_of(i) + "*" + name_of(j) + " does not occur in the problem");
    }
    if (std::find(selected.begin(), selected.end(), std::pair{i, j}) == selected.end()) selected.emplace_back(i, j);
  }
  return linearize(normalized, selected);
}

}  // namespace qsym
