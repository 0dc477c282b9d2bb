#include "qsym/dag.hpp"

#include <set>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

class DagBuilder {
 public:
  explicit DagBuilder(const Problem& problem) : problem_(problem) {}

  ColoredGraph build() {
    const int objective_colour = g_.colour_id("root:objective");
    const int constraint_colour = g_.colour_id("root:constraint");
    std::set<std::string> keys;
    for (int i = 0; i < problem_.num_variables(); ++i) keys.insert(variable_class_key(problem_, i));
    for (const auto& key : keys) g_.colour_id("var:" + key);

    std::vector<int> roots;
    roots.push_back(g_.add_vertex(objective_colour, {OriginKind::Objective, 0, 0}));
    g_.set_label(roots.back(), "+ c0");
    for (int k = 0; k < problem_.num_constraints(); ++k) {
      roots.push_back(g_.add_vertex(constraint_colour, {OriginKind::Constraint, k + 1, 0}));
      g_.set_label(roots.back(), "+ " + problem_.constraints[static_cast<std::size_t>(k)].label);
    }
    for (int i = 0; i < problem_.num_variables(); ++i) {
      vars_.push_back(g_.add_vertex("var:" + variable_class_key(problem_, i), {OriginKind::Variable, i, 0}));
      g_.set_label(vars_.back(), problem_.variables[static_cast<std::size_t>(i)].name);
    }
    add_equation(roots[0], problem_.objective);
    for (int k = 0; k < problem_.num_constraints(); ++k) {
      add_equation(roots[static_cast<std::size_t>(k) + 1], problem_.constraints[static_cast<std::size_t>(k)].body);
    }
    g_.layers = 3;
    return std::move(g_);
  }

 private:
  int literal(int depth, const Rational& value) {
    const int v = g_.add_vertex("lit@" + std::to_string(depth) + ":" + format_rational(value),
                                {OriginKind::Literal, next_literal_++, depth});
    g_.set_label(v, format_rational(value));
    return v;
  }

  int op(const std::string& symbol) {
    const int v = g_.add_vertex("op@1:" + symbol, {OriginKind::Operator, next_operator_++, 1});
    g_.set_label(v, symbol);
    return v;
  }

  void add_equation(int root, const QuadForm& form) {
    if (form.constant != 0) g_.add_edge(root, literal(1, form.constant));
    for (const auto& [i, coef] : form.lin) {
      if (coef == 1) {
        g_.add_edge(root, vars_[static_cast<std::size_t>(i)]);
        continue;
      }
      const int times = op("*");
      g_.add_edge(root, times);
      g_.add_edge(times, literal(2, coef));
      g_.add_edge(times, vars_[static_cast<std::size_t>(i)]);
    }
    for (const auto& [key, coef] : form.quad) {
      const auto [i, j] = key;
      const int node = op(i == j ? "sq" : "*");
      g_.add_edge(root, node);
      if (coef != 1) g_.add_edge(node, literal(2, coef));
      g_.add_edge(node, vars_[static_cast<std::size_t>(i)]);
      g_.add_edge(node, vars_[static_cast<std::size_t>(j)]);
    }
  }

  const Problem& problem_;
  ColoredGraph g_;
  std::vector<int> vars_;
  int next_literal_ = 0;
  int next_operator_ = 0;
};

}  // namespace

ColoredGraph build_dag(const Problem& problem) {
  if (!problem.is_normalized()) throw PreconditionError("the expression DAG needs a normalized problem");
  return DagBuilder(problem).build();
}

}  // namespace qsym
