#pragma once

#include <map>
#include <vector>

#include "qsym/encode.hpp"
#include "qsym/graph.hpp"

namespace qsym {

// Coefficient labels: positive values ascending get 1, 2, ...; negative
// values follow by ascending magnitude. Zero is never labelled.
struct LabelMap {
  std::vector<Rational> values;     // values[mu - 1]
  std::map<Rational, int> label;    // mu
  int layers = 1;                   // bits of the largest label

  int size() const { return static_cast<int>(values.size()); }
  int operator()(const Rational& value) const;  // throws PreconditionError if unlabelled
};

LabelMap label_coefficients(const SparseEncoding& enc);
// Any injective positive labelling of the listed values.
LabelMap make_label_map(const std::map<Rational, int>& labels);

// Bit positions set in `label`; throws unless 1 <= label <= 2^layers - 1.
std::vector<int> binary_layers(int label, int layers);

// Equation copies E_k^t for each bit layer t (layer-major), then one vertex
// for the constant column and one per variable column. Entry (k, j, z) joins
// E_k^t to column j for every set bit t of mu(z).
ColoredGraph build_blg_flat(const SparseEncoding& enc);
ColoredGraph build_blg_flat(const SparseEncoding& enc, const LabelMap& labels);

// Equation copies as in the flat graph, then the constant and variables on
// the linear layer, then a second copy of both for quadratic terms.
// Constants and linear terms attach to the linear layer. A quadratic term of
// equation k attaches E_k^t to the quadratic copy of each of its variables,
// and the term itself becomes an edge (or loop) between those copies when
// this is unambiguous: every variable of k occurs in one monomial of k, and
// no other monomial in the problem lies inside k's quadratic support.
// Otherwise each monomial of k gets its own term vertex.
ColoredGraph build_blg_tensor(const SparseEncoding& enc);
ColoredGraph build_blg_tensor(const SparseEncoding& enc, const LabelMap& labels);

}  // namespace qsym
