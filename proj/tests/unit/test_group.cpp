#include <doctest.h>

#include "oracles.hpp"
#include "qsym/aut.hpp"
#include "qsym/blg.hpp"
#include "qsym/dag.hpp"
#include "qsym/errors.hpp"
#include "qsym/group.hpp"
#include "qsym/io.hpp"

using namespace qsym;

namespace {

std::set<Permutation> as_set(const PermGroup& g) {
  const auto e = g.elements();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("detect QP1") {
  const auto r = detect(oracle::load("qp1.prob"), Representation::BlgTensor);
  CHECK(r.group.generators() == std::vector<Permutation>{Permutation::from_cycles(4, {{0, 3}, {1, 2}})});
  CHECK(r.graph_vertices == 18);
  CHECK(r.graph_layers == 4);
  REQUIRE(r.verification.entries.size() == 1);
  CHECK(r.verification.entries[0].sigma == Permutation::from_cycles(3, {{0, 1}}));
  CHECK(orbit_string(r.orbits, r.names) == "{x1,x4},{x2,x3}");
}

TEST_CASE("detect LQP1 and restriction to originals") {
  const auto r = detect(oracle::load("qp1.prob"), Representation::BlgFlat);
  CHECK(generator_strings(r.group, r.names) == std::vector<std::string>{"(x1 x4)(x2 x3)(X11 X44)"});
  CHECK(r.verification.all_verified());
  const auto labels = r.problem.constraint_labels();
  CHECK(r.verification.entries[0].sigma->to_cycle_string(labels) == "(c1 c2)(c5 c6)(c7 c9)(c8 c10)");

  const auto originals = detect(oracle::load("qp1.prob"), Representation::BlgFlat, DetectOptions{true});
  CHECK(generator_strings(originals.group, originals.names) == std::vector<std::string>{"(x1 x4)(x2 x3)"});
}

TEST_CASE("projection") {
  const Problem p = normalize(oracle::load("qp1.prob"));
  const auto g = build_blg_tensor(tensor_encode(p));
  CHECK(project_to_variables(PermGroup(g.num_vertices()), g, 4).is_trivial());

  // Send x1 to a constraint vertex: not a variable permutation.
  std::vector<int> image(static_cast<std::size_t>(g.num_vertices()));
  std::iota(image.begin(), image.end(), 0);
  std::swap(image[9], image[1]);
  CHECK_THROWS_AS(project_to_variables(PermGroup(g.num_vertices(), {Permutation(image)}), g, 4), InternalError);

  CHECK_THROWS_AS(restrict_to_prefix(PermGroup(3, {Permutation::from_cycles(3, {{0, 2}})}), 2), InternalError);
}

TEST_CASE("projection is a homomorphism") {
  for (const char* name : {"qp1.prob", "circles.prob", "toy.prob", "sec3_lqp.prob"}) {
    const Problem p = normalize(oracle::load(name));
    const auto g = build_blg_tensor(tensor_encode(p));
    const auto gens = automorphism_group(g).group.generators();
    auto project = [&](const Permutation& x) {
      const auto q = project_to_variables(PermGroup(g.num_vertices(), {x}), g, p.num_variables());
      return q.is_trivial() ? Permutation::identity(p.num_variables()) : q.generators()[0];
    };
    for (const auto& a : gens) {
      for (const auto& b : gens) CHECK(project(a * b) == project(a) * project(b));
    }
  }
}

TEST_CASE("verification report") {
  const Problem p = normalize(oracle::load("qp1.prob"));
  const auto report = verify_formulation_group(
      p, {Permutation::identity(4), Permutation::from_cycles(4, {{0, 3}, {1, 2}}), Permutation::from_cycles(4, {{0, 1}})});
  CHECK(report.entries[0].sigma == Permutation::identity(3));
  CHECK(report.entries[1].sigma == Permutation::from_cycles(3, {{0, 1}}));
  CHECK_FALSE(report.entries[2].sigma);
  CHECK_FALSE(report.entries[2].failure.empty());
  CHECK_FALSE(report.all_verified());
}

TEST_CASE("detected groups equal the brute-force formulation group") {
  oracle::ProblemGenerator gen(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const int m = 1 + trial % 4;
    const Problem p = normalize(gen.problem(n, m, trial % 2 == 0, trial % 3 != 0, trial % 2 == 1));
    const auto expected = oracle::formulation_group(p);
    for (auto rep : {Representation::BlgTensor, Representation::Dag}) {
      const auto r = detect(p, rep);
      CHECK(r.verification.all_verified());
      CHECK(as_set(r.group) == expected);
    }
    if (p.is_linear()) {
      const auto r = detect(p, Representation::BlgFlat);
      CHECK(as_set(r.group) == expected);
    }
  }
}

TEST_CASE("fixtures agree across representations") {
  for (const char* name : {"qp1.prob", "ex1.prob", "ex2.prob", "sec3_qp.prob", "sec3_lqp.prob", "ex4.prob", "toy.prob",
                           "trivial.prob", "mixed.prob", "circles.prob", "lqp1.prob"}) {
    const auto report = compare_representations(oracle::load(name));
    CHECK_MESSAGE(report.groups_agree, name);
  }
}

TEST_CASE("representation names") {
  CHECK(parse_representation("blg1") == Representation::BlgFlat);
  CHECK(std::string(representation_name(Representation::Dag)) == "dag");
  CHECK_THROWS_AS(parse_representation("nauty"), PreconditionError);
}
