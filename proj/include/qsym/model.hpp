#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsym/permutation.hpp"
#include "qsym/rational.hpp"

namespace qsym {

enum class VarKind { Continuous, Integer, Binary };

struct Variable {
  std::string name;
  std::optional<Rational> lower;  // nullopt: -inf
  std::optional<Rational> upper;  // nullopt: +inf
  VarKind kind = VarKind::Continuous;
  // Set for a linearization auxiliary X_ij standing for x_i * x_j (i <= j).
  std::optional<std::pair<int, int>> aux_origin;

  bool is_integral() const { return kind != VarKind::Continuous; }
  const Rational& lo() const;  // throws PreconditionError when infinite
  const Rational& hi() const;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// sum quad[(i,j)] x_i x_j + sum lin[i] x_i + constant, with i <= j and
// 0-based variable indices. Zero coefficients are never stored.
struct QuadForm {
  std::map<std::pair<int, int>, Rational> quad;
  std::map<int, Rational> lin;
  Rational constant = 0;

  void add_quad(int i, int j, const Rational& coef);
  void add_lin(int i, const Rational& coef);
  void add(const QuadForm& other, const Rational& scale = 1);

  bool is_linear() const { return quad.empty(); }
  bool empty() const { return quad.empty() && lin.empty() && constant == 0; }
  int max_index() const;  // -1 if no variable appears

  Rational evaluate(std::span<const Rational> x) const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

// Stable textual key of a form; equal keys iff equal forms.
std::string canonical_key(const QuadForm& form);

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };

// body <relation> rhs. After normalize: relation is LessEqual and rhs is 0.
struct Constraint {
  std::string label;
  QuadForm body;
  Relation relation = Relation::LessEqual;
  Rational rhs = 0;

  bool is_normalized() const { return relation == Relation::LessEqual && rhs == 0; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Problem {
  Sense sense = Sense::Minimize;
  QuadForm objective;
  std::vector<Constraint> constraints;
  std::vector<Variable> variables;

  int num_variables() const { return static_cast<int>(variables.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }
  int find_variable(std::string_view name) const;  // -1 if absent

  bool is_normalized() const;
  bool is_linear() const;
  std::vector<std::string> variable_names() const;
  std::vector<std::string> constraint_labels() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Throws PreconditionError on out-of-range indices or lower > upper.
void validate(const Problem& problem);

// Folds right-hand sides into the constant term, negates >=, splits = into
// two <= rows ("<label>_le", "<label>_ge"), drops zeros. Rejects infinite
// bounds with a message naming the variable. Idempotent.
Problem normalize(const Problem& problem);

// Replaces every occurrence of x_i by x_{perm(i)}. Variable attributes move
// with their index (the variable at perm(i) inherits the bounds, kind and
// origin of i); names stay in place. Constraint order is unchanged.
Problem apply_variable_permutation(const Problem& problem, const Permutation& perm);

// Symmetry colour key of a variable: (kind, lower, upper) for ordinary
// variables, with binary folded into integer; auxiliaries add the square
// flag and the sorted keys of their origin variables.
std::string variable_class_key(const Problem& problem, int index);

// Dense class ids, numbered in sorted key order.
std::vector<int> variable_classes(const Problem& problem);

struct ConstraintMatch {
  std::optional<Permutation> sigma;
  std::string failure;  // empty when sigma is set
};

// Looks for sigma with apply_variable_permutation(P, perm).constraints[k] ==
// P.constraints[sigma(k)] for all k and an unchanged objective. Requires a
// normalized problem.
ConstraintMatch match_constraints(const Problem& problem, const Permutation& perm);

std::optional<Permutation> find_constraint_permutation(const Problem& problem, const Permutation& perm);

}  // namespace qsym
