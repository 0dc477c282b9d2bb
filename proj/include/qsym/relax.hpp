#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qsym/model.hpp"

namespace qsym {

struct AuxVar {
  int index = 0;                 // variable index in the relaxed problem
  std::pair<int, int> origin;    // (i, j), i <= j
  std::string name;
};

struct LinearizedProblem {
  Problem base;
  std::vector<AuxVar> aux;  // ascending origin
  int rlt_begin = 0;        // constraint range [rlt_begin, rlt_end) holds the envelope rows
  int rlt_end = 0;
};

enum class EnvelopeRow { UnderLower, UnderUpper, OverA, OverB };

// The four McCormick inequalities for X = x_i x_j, each as body <= 0, in
// emission order. `aux` is the index X takes in the same variable space.
std::array<QuadForm, 4> mccormick_envelope(const Variable& xi, const Variable& xj, int i, int j, int aux);

// Replaces every quadratic monomial by an auxiliary variable and appends its
// envelope rows. Rows equal to an earlier row are dropped; rows in X alone
// tighten X's bounds instead.
LinearizedProblem mccormick_relax(const Problem& problem);

// Linearizes only `monomials` (pairs of 0-based indices, either order).
// Throws PreconditionError for a monomial that does not occur.
LinearizedProblem relax_subset(const Problem& problem, const std::vector<std::pair<int, int>>& monomials);

}  // namespace qsym
