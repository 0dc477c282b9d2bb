#include "qsym/encode.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

SparseEncoding skeleton(const Problem& problem, EncodingKind kind) {
  SparseEncoding enc;
  enc.kind = kind;
  enc.num_variables = problem.num_variables();
  enc.num_equations = problem.num_constraints() + 1;
  enc.variable_names = problem.variable_names();
  enc.equation_labels.push_back("c0");
  for (const auto& label : problem.constraint_labels()) enc.equation_labels.push_back(label);
  for (int i = 0; i < problem.num_variables(); ++i) enc.variable_class_keys.push_back(variable_class_key(problem, i));
  return enc;
}

void push(SparseEncoding& enc, const Rational& value, int i, int j, int k) {
  if (value == 0) return;
  enc.M.push_back(value);
  enc.I.push_back(i);
  enc.J.push_back(j);
  enc.K.push_back(k);
}

void sort_entries(SparseEncoding& enc) {
  std::vector<std::size_t> order(enc.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(enc.K[a], enc.I[a], enc.J[a]) < std::tie(enc.K[b], enc.I[b], enc.J[b]);
  });
  SparseEncoding sorted = enc;
  for (std::size_t p = 0; p < order.size(); ++p) {
    sorted.M[p] = enc.M[order[p]];
    sorted.I[p] = enc.I[order[p]];
    sorted.J[p] = enc.J[order[p]];
    sorted.K[p] = enc.K[order[p]];
  }
  enc = std::move(sorted);
}

std::vector<const QuadForm*> equations(const Problem& problem) {
  std::vector<const QuadForm*> forms{&problem.objective};
  for (const auto& c : problem.constraints) forms.push_back(&c.body);
  return forms;
}

template <typename T>
std::string joined(const std::vector<T>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (p) out << " ";
    if constexpr (std::is_same_v<T, Rational>) {
      out << format_rational(values[p]);
    } else {
      out << values[p];
    }
  }
  out << ")";
  return out.str();
}

}  // namespace

std::vector<int> SparseEncoding::shape() const {
  if (kind == EncodingKind::Tensor) return {num_variables + 1, num_variables + 1, num_equations};
  return {num_equations, num_variables + 1};
}

SparseEncoding tensor_encode(const Problem& problem) {
  if (!problem.is_normalized()) throw PreconditionError("tensor encoding requires a normalized problem");
  SparseEncoding enc = skeleton(problem, EncodingKind::Tensor);
  const auto forms = equations(problem);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const QuadForm& f = *forms[k];
    push(enc, f.constant, 0, 0, static_cast<int>(k));
    for (const auto& [i, coef] : f.lin) push(enc, coef, 0, i + 1, static_cast<int>(k));
    for (const auto& [key, coef] : f.quad) push(enc, coef, key.first + 1, key.second + 1, static_cast<int>(k));
  }
  sort_entries(enc);
  return enc;
}

SparseEncoding flat_encode(const Problem& problem) {
  if (!problem.is_normalized()) throw PreconditionError("flat encoding requires a normalized problem");
  if (!problem.is_linear()) {
    throw PreconditionError("flat encoding needs a linear problem; relax the quadratic terms first");
  }
  SparseEncoding enc = skeleton(problem, EncodingKind::Flat);
  const auto forms = equations(problem);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const QuadForm& f = *forms[k];
    push(enc, f.constant, 0, 0, static_cast<int>(k));
    for (const auto& [i, coef] : f.lin) push(enc, coef, 0, i + 1, static_cast<int>(k));
  }
  sort_entries(enc);
  return enc;
}

SparseEncoding flat_encode(const LinearizedProblem& lin) { return flat_encode(lin.base); }

std::vector<DenseMatrix> densify_tensor(const SparseEncoding& enc) {
  if (enc.kind != EncodingKind::Tensor) throw PreconditionError("expected a tensor encoding");
  const auto dim = static_cast<std::size_t>(enc.num_variables + 1);
  std::vector<DenseMatrix> dense(static_cast<std::size_t>(enc.num_equations), DenseMatrix(dim, std::vector<Rational>(dim)));
  for (std::size_t p = 0; p < enc.size(); ++p) {
    auto& a = dense[static_cast<std::size_t>(enc.K[p])];
    const auto i = static_cast<std::size_t>(enc.I[p]), j = static_cast<std::size_t>(enc.J[p]);
    a[i][j] = enc.M[p];
    a[j][i] = enc.M[p];
  }
  return dense;
}

SparseEncoding sparsify_tensor(const std::vector<DenseMatrix>& dense, const SparseEncoding& like) {
  SparseEncoding enc = like;
  enc.M.clear();
  enc.I.clear();
  enc.J.clear();
  enc.K.clear();
  for (std::size_t k = 0; k < dense.size(); ++k) {
    for (std::size_t i = 0; i < dense[k].size(); ++i) {
      for (std::size_t j = i; j < dense[k][i].size(); ++j) {
        push(enc, dense[k][i][j], static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
      }
    }
  }
  return enc;
}

DenseMatrix densify_flat(const SparseEncoding& enc) {
  if (enc.kind != EncodingKind::Flat) throw PreconditionError("expected a flat encoding");
  DenseMatrix dense(static_cast<std::size_t>(enc.num_equations),
                    std::vector<Rational>(static_cast<std::size_t>(enc.num_variables + 1)));
  for (std::size_t p = 0; p < enc.size(); ++p) {
    dense[static_cast<std::size_t>(enc.K[p])][static_cast<std::size_t>(enc.J[p])] = enc.M[p];
  }
  return dense;
}

SparseEncoding permute_encoding(const SparseEncoding& enc, const Permutation& vars, const Permutation& constraints) {
  if (vars.size() != enc.num_variables || constraints.size() != enc.num_equations - 1) {
    throw PreconditionError("permutation sizes do not match the encoding");
  }
  SparseEncoding out = enc;
  auto var = [&](int index) { return index == 0 ? 0 : vars(index - 1) + 1; };
  for (std::size_t p = 0; p < out.size(); ++p) {
    int i = enc.kind == EncodingKind::Tensor ? var(enc.I[p]) : 0;
    int j = var(enc.J[p]);
    if (i > j) std::swap(i, j);
    out.I[p] = i;
    out.J[p] = j;
    out.K[p] = enc.K[p] == 0 ? 0 : constraints(enc.K[p] - 1) + 1;
  }
  sort_entries(out);
  return out;
}

EntryCountBounds entry_count_bounds(long long n, long long m) {
  if (n < 0 || m < 0) throw PreconditionError("entry counts need n, m >= 0");
  const BigInt N = n, Mc = m;
  EntryCountBounds b;
  b.flat_worst = (1 + N) * (2 + N) * (1 + Mc + 2 * N * N + 2 * N) / 2;
  b.tensor_worst = (1 + N) * (1 + N) * (1 + Mc);
  b.crossover = Mc > 3 * N * N + 6 * N + 3;
  return b;
}

std::string encoding_csv(const SparseEncoding& enc) {
  std::ostringstream out;
  out << "K,I,J,M\n";
  for (std::size_t p = 0; p < enc.size(); ++p) {
    out << enc.K[p] << "," << enc.I[p] << "," << enc.J[p] << "," << format_rational(enc.M[p]) << "\n";
  }
  return out.str();
}

std::string encoding_text(const SparseEncoding& enc) {
  std::ostringstream out;
  out << "method: " << (enc.kind == EncodingKind::Tensor ? "tensor" : "flat") << "\n";
  out << "shape: " << joined(enc.shape()) << "\n";
  out << "M = " << joined(enc.M) << "\n";
  out << "I = " << joined(enc.I) << "\n";
  out << "J = " << joined(enc.J) << "\n";
  out << "K = " << joined(enc.K) << "\n";
  return out.str();
}

}  // namespace qsym
