#include "qsym/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

void add_coef(std::map<std::pair<int, int>, Rational>& terms, std::pair<int, int> key, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms.erase(it);
  }
}

QuadForm negated(const QuadForm& form) {
  QuadForm out;
  out.add(form, -1);
  return out;
}

std::string kind_tag(VarKind kind) {
  switch (kind) {
    case VarKind::Continuous:
      return "C";
    case VarKind::Integer:
    case VarKind::Binary:
      return "Z";
  }
  return "?";
}

std::string bound_text(const std::optional<Rational>& b, bool lower) {
  if (!b) return lower ? "-inf" : "inf";
  return format_rational(*b);
}

std::string base_key(const Variable& v) {
  return kind_tag(v.kind) + "[" + bound_text(v.lower, true) + "," + bound_text(v.upper, false) + "]";
}

QuadForm permute_form(const QuadForm& form, const Permutation& perm) {
  QuadForm out;
  for (const auto& [key, coef] : form.quad) out.add_quad(perm(key.first), perm(key.second), coef);
  for (const auto& [i, coef] : form.lin) out.add_lin(perm(i), coef);
  out.constant = form.constant;
  return out;
}

}  // namespace

const Rational& Variable::lo() const {
  if (!lower) throw PreconditionError("variable '" + name + "' has no finite lower bound");
  return *lower;
}

const Rational& Variable::hi() const {
  if (!upper) throw PreconditionError("variable '" + name + "' has no finite upper bound");
  return *upper;
}

void QuadForm::add_quad(int i, int j, const Rational& coef) {
  add_coef(quad, {std::min(i, j), std::max(i, j)}, coef);
}

void QuadForm::add_lin(int i, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = lin.try_emplace(i, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) lin.erase(it);
  }
}

void QuadForm::add(const QuadForm& other, const Rational& scale) {
  for (const auto& [key, coef] : other.quad) add_quad(key.first, key.second, coef * scale);
  for (const auto& [i, coef] : other.lin) add_lin(i, coef * scale);
  constant += other.constant * scale;
}

int QuadForm::max_index() const {
  int result = -1;
  for (const auto& [key, coef] : quad) result = std::max({result, key.first, key.second});
  for (const auto& [i, coef] : lin) result = std::max(result, i);
  return result;
}

Rational QuadForm::evaluate(std::span<const Rational> x) const {
  Rational total = constant;
  for (const auto& [key, coef] : quad) {
    total += coef * x[static_cast<std::size_t>(key.first)] * x[static_cast<std::size_t>(key.second)];
  }
  for (const auto& [i, coef] : lin) total += coef * x[static_cast<std::size_t>(i)];
  return total;
}

std::string canonical_key(const QuadForm& form) {
  std::ostringstream out;
  for (const auto& [key, coef] : form.quad) out << 'q' << key.first << ',' << key.second << ':' << coef.str() << ';';
  for (const auto& [i, coef] : form.lin) out << 'l' << i << ':' << coef.str() << ';';
  out << 'c' << form.constant.str();
  return out.str();
}

int Problem::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

bool Problem::is_normalized() const {
  return std::all_of(constraints.begin(), constraints.end(), [](const Constraint& c) { return c.is_normalized(); });
}

bool Problem::is_linear() const {
  return objective.is_linear() &&
         std::all_of(constraints.begin(), constraints.end(), [](const Constraint& c) { return c.body.is_linear(); });
}

std::vector<std::string> Problem::variable_names() const {
  std::vector<std::string> names;
  for (const auto& v : variables) names.push_back(v.name);
  return names;
}

std::vector<std::string> Problem::constraint_labels() const {
  std::vector<std::string> labels;
  for (const auto& c : constraints) labels.push_back(c.label);
  return labels;
}

void validate(const Problem& problem) {
  const int n = problem.num_variables();
  auto check_form = [&](const QuadForm& form, const std::string& where) {
    for (const auto& [key, coef] : form.quad) {
      if (key.first < 0 || key.second >= n || key.first > key.second) {
        throw PreconditionError(where + ": quadratic term references an invalid variable index");
      }
    }
    for (const auto& [i, coef] : form.lin) {
      if (i < 0 || i >= n) throw PreconditionError(where + ": linear term references an invalid variable index");
    }
  };
  check_form(problem.objective, "objective");
  for (const auto& c : problem.constraints) check_form(c.body, "constraint " + c.label);
  for (const auto& v : problem.variables) {
    if (v.lower && v.upper && *v.lower > *v.upper) {
      throw PreconditionError("variable '" + v.name + "' has lower bound above upper bound");
    }
    if (v.kind == VarKind::Binary && (v.lower != Rational(0) || v.upper != Rational(1))) {
      throw PreconditionError("binary variable '" + v.name + "' must have bounds [0,1]");
    }
    if (v.aux_origin) {
      const auto [a, b] = *v.aux_origin;
      if (a < 0 || b >= n || a > b) throw PreconditionError("auxiliary '" + v.name + "' has an invalid origin");
    }
  }
}

Problem normalize(const Problem& problem) {
  validate(problem);
  for (const auto& v : problem.variables) {
    if (!v.lower || !v.upper) throw PreconditionError("variable '" + v.name + "' is unbounded");
  }
  Problem out;
  out.sense = problem.sense;
  out.variables = problem.variables;
  out.objective.add(problem.objective);
  for (const auto& c : problem.constraints) {
    QuadForm diff;
    diff.add(c.body);
    diff.constant -= c.rhs;
    switch (c.relation) {
      case Relation::LessEqual:
        out.constraints.push_back({c.label, std::move(diff), Relation::LessEqual, 0});
        break;
      case Relation::GreaterEqual:
        out.constraints.push_back({c.label, negated(diff), Relation::LessEqual, 0});
        break;
      case Relation::Equal:
        out.constraints.push_back({c.label + "_le", diff, Relation::LessEqual, 0});
        out.constraints.push_back({c.label + "_ge", negated(diff), Relation::LessEqual, 0});
        break;
    }
  }
  return out;
}

Problem apply_variable_permutation(const Problem& problem, const Permutation& perm) {
  if (perm.size() != problem.num_variables()) {
    throw PreconditionError("permutation size " + std::to_string(perm.size()) + " does not match " +
                            std::to_string(problem.num_variables()) + " variables");
  }
  Problem out;
  out.sense = problem.sense;
  out.objective = permute_form(problem.objective, perm);
  for (const auto& c : problem.constraints) {
    out.constraints.push_back({c.label, permute_form(c.body, perm), c.relation, c.rhs});
  }
  out.variables = problem.variables;
  for (int i = 0; i < problem.num_variables(); ++i) {
    Variable moved = problem.variables[static_cast<std::size_t>(i)];
    moved.name = problem.variables[static_cast<std::size_t>(perm(i))].name;
    if (moved.aux_origin) {
      const int a = perm(moved.aux_origin->first);
      const int b = perm(moved.aux_origin->second);
      moved.aux_origin = std::pair{std::min(a, b), std::max(a, b)};
    }
    out.variables[static_cast<std::size_t>(perm(i))] = std::move(moved);
  }
  return out;
}

std::string variable_class_key(const Problem& problem, int index) {
  const Variable& v = problem.variables.at(static_cast<std::size_t>(index));
  std::string key = base_key(v);
  if (v.aux_origin) {
    const auto [a, b] = *v.aux_origin;
    std::string ka = base_key(problem.variables.at(static_cast<std::size_t>(a)));
    std::string kb = base_key(problem.variables.at(static_cast<std::size_t>(b)));
    if (kb < ka) std::swap(ka, kb);
    key = "aux" + std::string(a == b ? "2" : "1") + "{" + ka + "*" + kb + "}" + key;
  }
  return key;
}

std::vector<int> variable_classes(const Problem& problem) {
  std::vector<std::string> keys;
  for (int i = 0; i < problem.num_variables(); ++i) keys.push_back(variable_class_key(problem, i));
  std::vector<std::string> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ids;
  for (const auto& k : keys) {
    ids.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), k) - sorted.begin()));
  }
  return ids;
}

ConstraintMatch match_constraints(const Problem& problem, const Permutation& perm) {
  if (!problem.is_normalized()) throw PreconditionError("constraint matching requires a normalized problem");
  if (perm.size() != problem.num_variables()) {
    throw PreconditionError("permutation size does not match the number of variables");
  }
  const auto classes = variable_classes(problem);
  for (int i = 0; i < perm.size(); ++i) {
    if (classes[static_cast<std::size_t>(i)] != classes[static_cast<std::size_t>(perm(i))]) {
      return {std::nullopt, "maps " + problem.variables[static_cast<std::size_t>(i)].name + " to " +
                                problem.variables[static_cast<std::size_t>(perm(i))].name +
                                " of a different type or range"};
    }
  }
  const Problem permuted = apply_variable_permutation(problem, perm);
  if (permuted.objective != problem.objective) return {std::nullopt, "objective is not invariant"};

  // Original bodies bucketed by canonical key; equal bodies are consumed in
  // index order so sigma stays a bijection.
  std::unordered_map<std::string, std::vector<int>> buckets;
  for (int k = problem.num_constraints() - 1; k >= 0; --k) {
    buckets[canonical_key(problem.constraints[static_cast<std::size_t>(k)].body)].push_back(k);
  }
  std::vector<int> sigma(problem.constraints.size());
  for (std::size_t k = 0; k < permuted.constraints.size(); ++k) {
    auto it = buckets.find(canonical_key(permuted.constraints[k].body));
    if (it == buckets.end() || it->second.empty()) {
      return {std::nullopt, "constraint " + problem.constraints[k].label + " has no image"};
    }
    sigma[k] = it->second.back();
    it->second.pop_back();
  }
  return {Permutation(std::move(sigma)), {}};
}

std::optional<Permutation> find_constraint_permutation(const Problem& problem, const Permutation& perm) {
  return match_constraints(problem, perm).sigma;
}

}  // namespace qsym
