#pragma once

#include <string>
#include <vector>

#include "qsym/model.hpp"
#include "qsym/permutation.hpp"
#include "qsym/relax.hpp"

namespace qsym {

enum class EncodingKind { Tensor, Flat };

// Coordinate list of nonzero coefficients, sorted by (K, I, J).
//
// Tensor: equation K holds the constant at (0,0), the coefficient of x_i at
// (0,i) and of x_i x_j at (i,j), i <= j; variable indices are 1-based.
// Flat: I is always 0, J is the column (0 = constant, j = variable j), K the
// row (0 = objective).
struct SparseEncoding {
  EncodingKind kind = EncodingKind::Tensor;
  std::vector<Rational> M;
  std::vector<int> I, J, K;

  int num_variables = 0;  // n (tensor) or columns minus the constant (flat)
  int num_equations = 0;  // objective plus constraints
  std::vector<std::string> variable_names;
  std::vector<std::string> equation_labels;  // "c0" first
  std::vector<std::string> variable_class_keys;

  std::size_t size() const { return M.size(); }
  // (n+1, n+1, m+1) for tensor, (rows, columns) for flat.
  std::vector<int> shape() const;

  friend bool operator==(const SparseEncoding&, const SparseEncoding&) = default;
};

SparseEncoding tensor_encode(const Problem& problem);
// Throws PreconditionError if a quadratic term remains.
SparseEncoding flat_encode(const Problem& problem);
SparseEncoding flat_encode(const LinearizedProblem& lin);

// One symmetric (n+1)x(n+1) matrix per equation; (i,j) entries are mirrored.
using DenseMatrix = std::vector<std::vector<Rational>>;
std::vector<DenseMatrix> densify_tensor(const SparseEncoding& enc);
// Reads the upper triangles back; metadata is copied from `like`.
SparseEncoding sparsify_tensor(const std::vector<DenseMatrix>& dense, const SparseEncoding& like);
// rows x (1 + columns).
DenseMatrix densify_flat(const SparseEncoding& enc);

// Relabels variables by `vars` (acting on 0-based variable indices) and
// constraints by `constraints` (0-based, objective excluded), then re-sorts.
// This is A(pi, pi, sigma) for tensor encodings and A(sigma, pi) for flat.
SparseEncoding permute_encoding(const SparseEncoding& enc, const Permutation& vars, const Permutation& constraints);

struct EntryCountBounds {
  BigInt flat_worst;
  BigInt tensor_worst;
  bool crossover = false;  // m > 3n^2 + 6n + 3
};
EntryCountBounds entry_count_bounds(long long n, long long m);

// "K,I,J,M" header, one row per entry.
std::string encoding_csv(const SparseEncoding& enc);
// "M = (3 3 2 ...)" style listing of the four vectors.
std::string encoding_text(const SparseEncoding& enc);

}  // namespace qsym
