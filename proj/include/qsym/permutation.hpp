#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qsym {

// A bijection on {0, ..., n-1}, stored as its image vector.
//
// Composition follows function notation: (a * b)(i) == a(b(i)), so b acts
// first. Acting on a point vector x, a permutation moves the entry at i to
// position p(i).
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  // Cycles use 0-based points; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;

  // Non-trivial cycles, each starting at its smallest point, ordered by that
  // point.
  std::vector<std::vector<int>> cycles() const;

  // "(x1 x4)(x2 x3)" using `names[i]` for point i; the identity prints "()".
  std::string to_cycle_string(std::span<const std::string> names) const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace qsym
