#include "qsym/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsym {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 0 || v >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("image is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= n || to < 0 || to >= n) {
        throw std::invalid_argument("cycle point out of range");
      }
      image[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  }
  return inv;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == static_cast<int>(start)) continue;
    std::vector<int> cycle;
    for (int v = static_cast<int>(start); !seen[static_cast<std::size_t>(v)]; v = image_[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      cycle.push_back(v);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycle_string(std::span<const std::string> names) const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      const auto idx = static_cast<std::size_t>(cycle[k]);
      if (idx < names.size()) {
        out << names[idx];
      } else {
        out << cycle[k];
      }
    }
    out << ')';
  }
  return out.str();
}

std::string Permutation::to_cycle_string() const { return to_cycle_string({}); }

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation result;
  result.image_.resize(b.image_.size());
  for (std::size_t i = 0; i < b.image_.size(); ++i) {
    result.image_[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : p.image()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qsym
