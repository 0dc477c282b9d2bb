#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qsym/permutation.hpp"
#include "qsym/rational.hpp"

namespace qsym {

// A permutation group given by generators. The identity is never stored as a
// generator. Order and membership come from a deterministic Schreier-Sims
// stabilizer chain, built lazily.
class PermGroup {
 public:
  explicit PermGroup(int degree = 0) : degree_(degree) {}
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool is_trivial() const { return generators_.empty(); }

  // Ignores identities and exact duplicates.
  void add_generator(const Permutation& g);

  BigInt order() const;
  bool contains(const Permutation& g) const;

  // Explicit closure, sorted. Throws PreconditionError past `limit` elements.
  std::vector<Permutation> elements(std::size_t limit = 1'000'000) const;

  // Orbits on all points, each sorted, ordered by smallest point.
  std::vector<std::vector<int>> orbits() const;

  // Same group as permutation groups (mutual generator membership).
  bool same_group(const PermGroup& other) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<std::optional<Permutation>> transversal;  // u_p with u_p(base) = p
    std::vector<int> orbit;
  };

  void ensure_chain() const;
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;
  void rebuild_level(std::size_t i, const std::vector<Permutation>& strong) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  mutable bool chain_ready_ = false;
  mutable std::vector<Level> levels_;
};

}  // namespace qsym
