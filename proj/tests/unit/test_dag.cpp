#include <doctest.h>

#include "oracles.hpp"
#include "qsym/aut.hpp"
#include "qsym/blg.hpp"
#include "qsym/dag.hpp"
#include "qsym/errors.hpp"
#include "qsym/group.hpp"
#include "qsym/io.hpp"

using namespace qsym;

TEST_CASE("QP1 DAG") {
  const Problem p = normalize(oracle::load("qp1.prob"));
  const auto dag = build_dag(p);
  CHECK(dag.num_vertices() == 19);
  CHECK(dag.num_edges() == 21);
  const auto group = project_to_variables(automorphism_group(dag).group, dag, 4);
  CHECK(group.generators() == std::vector<Permutation>{Permutation::from_cycles(4, {{0, 3}, {1, 2}})});

  const auto blg = build_blg_tensor(tensor_encode(p));
  CHECK(dag.num_vertices() + dag.num_edges() < blg.num_vertices() + blg.num_edges());
}

TEST_CASE("single constraint DAG") {
  const auto dag = build_dag(normalize(parse_problem("var x1 in [0,1]\nmin 0\nst x1 <= 0\n")));
  CHECK(dag.num_vertices() == 3);
  CHECK(dag.num_edges() == 1);
  CHECK(automorphism_group(dag).group.is_trivial());
  CHECK_THROWS_AS(build_dag(parse_problem("var x in [0,1]\nmin x\nst x >= 1\n")), PreconditionError);
}

TEST_CASE("coefficients and products are distinguished") {
  // 2 x1 + x2*x3 against x1*x2 + 2 x3: same multiset of symbols, different shape.
  const Problem p = normalize(parse_problem(
      "var x1 in [0,1]\nvar x2 in [0,1]\nvar x3 in [0,1]\nmin 0\nst 2 x1 + x2*x3 <= 1\nst x1*x2 + 2 x3 <= 1\n"));
  const auto dag = build_dag(p);
  const auto group = project_to_variables(automorphism_group(dag).group, dag, 3);
  std::set<Permutation> expected = oracle::formulation_group(p);
  const auto elements = group.elements();
  CHECK(std::set<Permutation>(elements.begin(), elements.end()) == expected);
}

TEST_CASE("comparison report") {
  const auto qp1 = compare_representations(oracle::load("qp1.prob"));
  REQUIRE(qp1.rows.size() == 3);
  CHECK(qp1.groups_agree);
  for (const auto& row : qp1.rows) CHECK(row.group.order() == 2);

  const auto toy = compare_representations(oracle::load("toy.prob"));
  CHECK(toy.groups_agree);
  for (const auto& row : toy.rows) {
    CHECK(row.group.generators() == std::vector<Permutation>{Permutation::from_cycles(2, {{0, 1}})});
  }
  CHECK(oracle::formulation_group(normalize(oracle::load("toy.prob"))).size() == 2);

  CHECK(compare_representations(parse_problem("min 0\n")).rows.empty());
}
