#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qsym/errors.hpp"
#include "qsym/group.hpp"
#include "qsym/io.hpp"
#include "qsym/relax.hpp"

using namespace qsym;

TEST_CASE("QP1 relaxes to the LQP1 listing") {
  const auto lin = mccormick_relax(oracle::load("qp1.prob"));
  const Problem expected = normalize(oracle::load("lqp1.prob"));
  CHECK(lin.base == expected);
  REQUIRE(lin.aux.size() == 3);
  CHECK(lin.aux[0].name == "X11");
  CHECK(lin.aux[1].name == "X23");
  CHECK(lin.aux[2].name == "X44");
  CHECK(lin.aux[1].origin == std::pair{1, 2});
  CHECK(lin.rlt_begin == 3);
  CHECK(lin.rlt_end == 10);
  // Objective plus ten constraints: eleven matrix rows.
  CHECK(lin.base.num_constraints() + 1 == 11);
  for (const auto& aux : lin.aux) {
    CHECK(*lin.base.variables[static_cast<std::size_t>(aux.index)].lower == 0);
  }
  CHECK(lin.base.is_linear());
}

TEST_CASE("linear problems are unchanged") {
  const Problem toy = oracle::load("toy.prob");
  const auto lin = mccormick_relax(toy);
  CHECK(lin.aux.empty());
  CHECK(lin.base == normalize(toy));
  CHECK(lin.rlt_begin == lin.rlt_end);
}

TEST_CASE("every auxiliary keeps between two and four rows") {
  for (const char* name : {"qp1.prob", "circles.prob", "mixed.prob", "ex4.prob"}) {
    const auto lin = mccormick_relax(oracle::load(name));
    CHECK(lin.base.is_linear());
    for (const auto& aux : lin.aux) {
      int rows = 0;
      for (int k = lin.rlt_begin; k < lin.rlt_end; ++k) {
        if (lin.base.constraints[static_cast<std::size_t>(k)].body.lin.count(aux.index)) ++rows;
      }
      CHECK(rows >= 2);
      CHECK(rows <= 4);
    }
  }
}

TEST_CASE("bilinear envelope at the centre of the unit square") {
  Variable x{"x", 0, 1}, y{"y", 0, 1};
  const auto rows = mccormick_envelope(x, y, 0, 1, 2);
  // Largest and smallest X allowed at (1/2, 1/2).
  Rational lo = -1000, hi = 1000;
  for (const auto& row : rows) {
    const Rational a = row.lin.at(2);
    const Rational rest = row.evaluate(std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0});
    if (a > 0) hi = std::min(hi, Rational(-rest / a));
    if (a < 0) lo = std::max(lo, Rational(-rest / a));
  }
  CHECK(lo == 0);
  CHECK(hi == Rational(1, 2));
  CHECK(Rational(1, 4) >= lo);
  CHECK(Rational(1, 4) <= hi);
}

TEST_CASE("envelopes hold at the true product") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng)), d(num(rng), den(rng));
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    const bool square = trial % 5 == 0;
    Variable xi{"xi", a, b}, xj{"xj", square ? a : c, square ? b : d};
    const auto rows = mccormick_envelope(xi, xj, 0, square ? 0 : 1, 2);
    std::uniform_int_distribution<int> t(0, 1000);
    for (int s = 0; s < 40; ++s) {
      const Rational u = xi.lo() + (xi.hi() - xi.lo()) * Rational(t(rng), 1000);
      const Rational v = square ? u : xj.lo() + (xj.hi() - xj.lo()) * Rational(t(rng), 1000);
      const std::vector<Rational> point{u, v, u * v};
      for (const auto& row : rows) CHECK(row.evaluate(point) <= 0);
    }
  }
}

TEST_CASE("relax_subset") {
  const Problem ex4 = oracle::load("ex4.prob");
  const auto none = relax_subset(ex4, {});
  CHECK(none.base == normalize(ex4));

  const auto one = relax_subset(ex4, {{0, 0}});
  CHECK(one.aux.size() == 1);
  CHECK_FALSE(one.base.is_linear());
  CHECK(one.base.objective.quad.count({1, 1}));
  CHECK(oracle::formulation_group(one.base).size() == 1);

  const auto both = relax_subset(ex4, {{1, 1}, {0, 0}});
  CHECK(both.base == mccormick_relax(ex4).base);
  const auto group = oracle::formulation_group(both.base);
  CHECK(group.size() == 2);
  CHECK(group.count(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));

  CHECK_THROWS_AS(relax_subset(ex4, {{0, 1}}), PreconditionError);
}

TEST_CASE("auxiliary names avoid clashes") {
  const auto lin = mccormick_relax(parse_problem("var x in [0,1]\nvar X11 in [0,1]\nmin x^2 + X11\n"));
  CHECK(lin.aux[0].name == "X11_");
  const auto wide = mccormick_relax(parse_problem(
      "var a in [0,1]\nvar b in [0,1]\nvar c in [0,1]\nvar d in [0,1]\nvar e in [0,1]\nvar f in [0,1]\n"
      "var g in [0,1]\nvar h in [0,1]\nvar i in [0,1]\nvar j in [0,1]\nmin a*j\n"));
  CHECK(wide.aux[0].name == "X1_10");
}

TEST_CASE("bounds of squares over a mixed-sign range") {
  const auto lin = mccormick_relax(parse_problem("var x in [-1,2]\nmin x^2\n"));
  const auto& aux = lin.base.variables[1];
  CHECK(*aux.upper == 4);
  CHECK(*aux.lower <= 0);
}
