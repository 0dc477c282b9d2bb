#include "qsym/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

BigInt ceil_of(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (q < r) ++q;
  return q;
}

BigInt floor_of(const Rational& r) {
  BigInt q = boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
  if (q > r) --q;
  return q;
}

}  // namespace

FeasibleSet enumerate_feasible(const Problem& problem, std::size_t lattice_limit) {
  const Problem p = normalize(problem);
  const int n = p.num_variables();
  std::vector<BigInt> lo, hi;
  BigInt lattice = 1;
  for (const auto& v : p.variables) {
    if (!v.is_integral()) throw PreconditionError("variable '" + v.name + "' is continuous; enumeration needs integers");
    lo.push_back(ceil_of(v.lo()));
    hi.push_back(floor_of(v.hi()));
    const BigInt width = hi.back() >= lo.back() ? BigInt(hi.back() - lo.back() + 1) : BigInt(0);
    lattice *= width;
  }
  if (lattice > lattice_limit) {
    throw PreconditionError("lattice has " + lattice.str() + " points, above the limit of " + std::to_string(lattice_limit));
  }
  FeasibleSet out;
  if (lattice == 0) return out;

  Point x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
  while (true) {
    bool feasible = true;
    for (const auto& c : p.constraints) {
      if (c.body.evaluate(x) > 0) {
        feasible = false;
        break;
      }
    }
    if (feasible) out.points.push_back(x);
    // Odometer increment, last coordinate fastest.
    int i = n - 1;
    while (i >= 0) {
      auto& xi = x[static_cast<std::size_t>(i)];
      if (xi < hi[static_cast<std::size_t>(i)]) {
        xi += 1;
        break;
      }
      xi = lo[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

Point permute_point(const Point& x, const Permutation& perm) {
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(perm(static_cast<int>(i)))] = x[i];
  return y;
}

SymmetryGroup symmetry_group_bruteforce(const Problem& problem) {
  return symmetry_group_bruteforce(problem, enumerate_feasible(problem));
}

SymmetryGroup symmetry_group_bruteforce(const Problem& problem, const FeasibleSet& feasible) {
  const int n = problem.num_variables();
  if (n > 8) throw PreconditionError("brute-force symmetry group is limited to 8 variables");
  const std::set<Point> points(feasible.points.begin(), feasible.points.end());
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  SymmetryGroup out;
  out.group = PermGroup(n);
  do {
    const Permutation perm(image);
    bool ok = true;
    for (const auto& x : feasible.points) {
      const Point y = permute_point(x, perm);
      if (!points.count(y) || problem.objective.evaluate(y) != problem.objective.evaluate(x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.elements.push_back(perm);
      out.group.add_generator(perm);
    }
  } while (std::next_permutation(image.begin(), image.end()));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

bool check_containment(const PermGroup& formulation, const PermGroup& symmetry) {
  if (formulation.degree() != symmetry.degree()) {
    throw PreconditionError("groups act on " + std::to_string(formulation.degree()) + " and " +
                            std::to_string(symmetry.degree()) + " points");
  }
  const auto elements = symmetry.elements();
  const std::set<Permutation> lookup(elements.begin(), elements.end());
  for (const auto& g : formulation.generators()) {
    if (!lookup.count(g)) return false;
  }
  return true;
}

PermGroup extend_degree(const PermGroup& group, int degree) {
  if (degree < group.degree()) throw PreconditionError("cannot shrink a group's degree");
  PermGroup out(degree);
  for (const auto& g : group.generators()) {
    std::vector<int> image = g.image();
    for (int i = group.degree(); i < degree; ++i) image.push_back(i);
    out.add_generator(Permutation(std::move(image)));
  }
  return out;
}

}  // namespace qsym
