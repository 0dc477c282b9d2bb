#pragma once

#include <cstddef>
#include <vector>

#include "qsym/model.hpp"
#include "qsym/perm_group.hpp"

namespace qsym {

using Point = std::vector<Rational>;

// Integer points of the bound box satisfying every constraint, sorted
// lexicographically. All variables must be integer with finite bounds.
struct FeasibleSet {
  std::vector<Point> points;
};

FeasibleSet enumerate_feasible(const Problem& problem, std::size_t lattice_limit = 1'000'000);

// The point with x_i moved to position perm(i).
Point permute_point(const Point& x, const Permutation& perm);

struct SymmetryGroup {
  PermGroup group;                   // generated by every non-identity element
  std::vector<Permutation> elements; // all of them, identity included, sorted
};

// Every pi with pi(F) = F and f0(pi(x)) = f0(x) on F. At most 8 variables.
SymmetryGroup symmetry_group_bruteforce(const Problem& problem);
SymmetryGroup symmetry_group_bruteforce(const Problem& problem, const FeasibleSet& feasible);

// Every generator of `formulation` lies in the expanded `symmetry` group.
// Throws PreconditionError when degrees differ.
bool check_containment(const PermGroup& formulation, const PermGroup& symmetry);

// Same generators acting on `degree` points, the new points fixed.
PermGroup extend_degree(const PermGroup& group, int degree);

}  // namespace qsym
