#include <doctest.h>

#include "oracles.hpp"
#include "qsym/errors.hpp"
#include "qsym/group.hpp"
#include "qsym/io.hpp"
#include "qsym/oracle.hpp"

using namespace qsym;

namespace {

std::vector<Point> points(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Point> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

Permutation cyc(int n, std::vector<std::vector<int>> c) { return Permutation::from_cycles(n, c); }

// G~ straight from the definition, as a set.
std::set<Permutation> symmetry_by_definition(const Problem& p, const std::vector<Point>& f) {
  std::set<Permutation> out;
  const std::set<Point> fs(f.begin(), f.end());
  for (const auto& pi : oracle::all_permutations(p.num_variables())) {
    bool ok = true;
    for (const auto& x : f) {
      Point y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(pi(static_cast<int>(i)))] = x[i];
      ok = ok && fs.count(y) && p.objective.evaluate(y) == p.objective.evaluate(x);
    }
    if (ok) out.insert(pi);
  }
  return out;
}

}  // namespace

TEST_CASE("example 1") {
  const Problem p = oracle::load("ex1.prob");
  const auto f = enumerate_feasible(p);
  CHECK(f.points == points({{0, 0}, {0, 1}, {1, 0}}));
  const auto g = symmetry_group_bruteforce(p);
  CHECK(g.elements == std::vector<Permutation>{Permutation::identity(2), cyc(2, {{0, 1}})});
}

TEST_CASE("QP and LQP feasible sets") {
  const Problem qp = oracle::load("sec3_qp.prob");
  const Problem lqp = oracle::load("sec3_lqp.prob");
  const auto fq = enumerate_feasible(qp);
  const auto fl = enumerate_feasible(lqp);
  CHECK(fq.points == points({{0, 1, 0}, {1, 0, 1}, {1, 1, 1}}));
  CHECK(fl.points == points({{0, 1, 0, 1}, {1, 0, 1, 0}, {1, 1, 1, 1}}));

  const auto gq = symmetry_group_bruteforce(qp);
  const auto gl = symmetry_group_bruteforce(lqp);
  const auto gq_set = std::set<Permutation>(gq.elements.begin(), gq.elements.end());
  const auto gl_set = std::set<Permutation>(gl.elements.begin(), gl.elements.end());
  CHECK(gq_set == symmetry_by_definition(qp, fq.points));
  CHECK(gl_set == symmetry_by_definition(lqp, fl.points));
  // x1 = x3 on every feasible point, so (x1 x3) is a symmetry of QP.
  CHECK(gq.elements.size() == 2);
  // Dihedral group of the square on (x1 x2 x3 x4).
  CHECK(gl.elements.size() == 8);
  for (const auto& listed : {cyc(4, {{0, 2}}), cyc(4, {{1, 3}}), cyc(4, {{0, 2}, {1, 3}}), cyc(4, {{0, 1}, {2, 3}}),
                             cyc(4, {{0, 3}, {1, 2}})}) {
    CHECK(gl_set.count(listed));
  }
  CHECK(gl.group.order() == 8);
  CHECK_FALSE(check_containment(gl.group, extend_degree(gq.group, 4)));
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_feasible(oracle::load("qp1.prob")), PreconditionError);
  CHECK_THROWS_AS(enumerate_feasible(parse_problem("var x int in [0,999]\nvar y int in [0,999]\nvar z int in [0,9]\nmin x\n")),
                  PreconditionError);
  const auto none = enumerate_feasible(parse_problem("var x1 bin\nmin x1\nst x1 <= -1\n"));
  CHECK(none.points.empty());
  const auto vacuous = symmetry_group_bruteforce(parse_problem("var a bin\nvar b bin\nvar c bin\nmin a\nst a <= -1\n"));
  CHECK(vacuous.elements.size() == 6);
  CHECK_THROWS_AS(symmetry_group_bruteforce(parse_problem(
                      "var a bin\nvar b bin\nvar c bin\nvar d bin\nvar e bin\nvar f bin\nvar g bin\nvar h bin\nvar i bin\nmin a\n")),
                  PreconditionError);
  const auto wide = enumerate_feasible(parse_problem("var x int in [-1,1]\nvar y int in [0,2]\nmin x\nst x + y <= 0\n"));
  CHECK(wide.points == points({{-1, 0}, {-1, 1}, {0, 0}}));
}

TEST_CASE("containment") {
  // QP1 on binary variables is infeasible, so its symmetry group is all of S4.
  const Problem qp1_binary = parse_problem(
      "var x1 bin\nvar x2 bin\nvar x3 bin\nvar x4 bin\nmax 3 x1 + 3 x4 + 2 x2*x3\n"
      "st c1: x2 + x1^2 + 1 <= 0\nst c2: x3 + x4^2 + 1 <= 0\nst c3: x2 + x3 + 1 <= 0\n");
  const auto vacuous = symmetry_group_bruteforce(qp1_binary);
  CHECK(vacuous.elements.size() == 24);
  CHECK(check_containment(detect(qp1_binary, Representation::BlgTensor).group, vacuous.group));

  // Shifted constants make the same structure feasible.
  const Problem qp1 = parse_problem(
      "var x1 bin\nvar x2 bin\nvar x3 bin\nvar x4 bin\nmax 3 x1 + 3 x4 + 2 x2*x3\n"
      "st c1: x2 + x1^2 - 1 <= 0\nst c2: x3 + x4^2 - 1 <= 0\nst c3: x2 + x3 - 1 <= 0\n");
  const auto formulation = detect(qp1, Representation::BlgTensor).group;
  CHECK(formulation.generators() == std::vector<Permutation>{cyc(4, {{0, 3}, {1, 2}})});
  CHECK(check_containment(formulation, symmetry_group_bruteforce(qp1).group));
  CHECK(check_containment(PermGroup(4), symmetry_group_bruteforce(qp1).group));
  CHECK_THROWS_AS(check_containment(PermGroup(3), PermGroup(4)), PreconditionError);
  CHECK(extend_degree(PermGroup(2, {cyc(2, {{0, 1}})}), 3).generators()[0] == cyc(3, {{0, 1}}));
}

TEST_CASE("brute-force groups are closed") {
  oracle::ProblemGenerator gen(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Problem p = gen.problem(3 + trial % 3, 2 + trial % 3, true, true, trial % 2 == 0);
    const auto g = symmetry_group_bruteforce(p);
    const std::set<Permutation> set(g.elements.begin(), g.elements.end());
    for (const auto& a : g.elements) {
      CHECK(set.count(a.inverse()));
      for (const auto& b : g.elements) CHECK(set.count(a * b));
    }
    CHECK(check_containment(detect(p, Representation::BlgTensor).group, g.group));
  }
}
