#include "qsym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

bool fixes_prefix(const Permutation& g, const std::vector<int>& base, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    if (g(base[k]) != base[k]) return false;
  }
  return true;
}

int first_moved_point(const Permutation& g) {
  for (int i = 0; i < g.size(); ++i) {
    if (g(i) != i) return i;
  }
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) : degree_(degree) {
  for (const auto& g : generators) add_generator(g);
}

void PermGroup::add_generator(const Permutation& g) {
  if (g.size() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (g.is_identity()) return;
  if (std::find(generators_.begin(), generators_.end(), g) != generators_.end()) return;
  generators_.push_back(g);
  chain_ready_ = false;
}

void PermGroup::rebuild_level(std::size_t i, const std::vector<Permutation>& strong) const {
  Level& level = levels_[i];
  std::vector<int> base;
  for (std::size_t k = 0; k < i; ++k) base.push_back(levels_[k].base_point);
  std::vector<Permutation> gens;
  for (const auto& s : strong) {
    if (fixes_prefix(s, base, i)) gens.push_back(s);
  }
  level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  level.orbit.clear();
  level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation::identity(degree_);
  level.orbit.push_back(level.base_point);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    const int p = level.orbit[head];
    for (const auto& s : gens) {
      const int q = s(p);
      if (!level.transversal[static_cast<std::size_t>(q)]) {
        level.transversal[static_cast<std::size_t>(q)] = s * *level.transversal[static_cast<std::size_t>(p)];
        level.orbit.push_back(q);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& g) const {
  Permutation h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const int image = h(levels_[i].base_point);
    const auto& u = levels_[i].transversal[static_cast<std::size_t>(image)];
    if (!u) return {h, i};
    h = u->inverse() * h;
  }
  return {h, levels_.size()};
}

void PermGroup::ensure_chain() const {
  if (chain_ready_) return;
  levels_.clear();
  std::vector<Permutation> strong = generators_;
  auto base_of = [&] {
    std::vector<int> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
  };
  // Every generator must move some base point.
  for (const auto& s : strong) {
    const auto base = base_of();
    if (fixes_prefix(s, base, base.size())) {
      levels_.push_back(Level{first_moved_point(s), {}, {}});
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i, strong);

  // Classic Schreier-Sims: sift every Schreier generator of every level;
  // a non-trivial residue becomes a new strong generator and the sweep
  // restarts from the deepest affected level.
  std::size_t i = levels_.size();
  while (i > 0) {
    --i;
    bool extended = false;
    std::vector<int> base = base_of();
    std::vector<Permutation> gens;
    for (const auto& s : strong) {
      if (fixes_prefix(s, base, i)) gens.push_back(s);
    }
    const Level level = levels_[i];
    for (int p : level.orbit) {
      const Permutation& up = *level.transversal[static_cast<std::size_t>(p)];
      for (const auto& s : gens) {
        const int q = s(p);
        const Permutation schreier = level.transversal[static_cast<std::size_t>(q)]->inverse() * s * up;
        if (schreier.is_identity()) continue;
        auto [residue, depth] = sift(schreier);
        if (residue.is_identity()) continue;
        strong.push_back(residue);
        if (depth == levels_.size()) {
          levels_.push_back(Level{first_moved_point(residue), {}, {}});
        }
        for (std::size_t k = i + 1; k < levels_.size(); ++k) rebuild_level(k, strong);
        i = levels_.size();
        extended = true;
        break;
      }
      if (extended) break;
    }
  }
  chain_ready_ = true;
}

BigInt PermGroup::order() const {
  ensure_chain();
  BigInt result = 1;
  for (const auto& level : levels_) result *= static_cast<unsigned>(level.orbit.size());
  return result;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.size() != degree_) return false;
  ensure_chain();
  return sift(g).first.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree_);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation current = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > limit) throw PreconditionError("group closure exceeds element limit");
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> result(seen.begin(), seen.end());
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(static_cast<std::size_t>(degree_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& g : generators_) {
    for (int v = 0; v < degree_; ++v) {
      const int a = find(v);
      const int b = find(g(v));
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> slot(static_cast<std::size_t>(degree_), -1);
  for (int v = 0; v < degree_; ++v) {
    const int root = find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
  }
  return classes;
}

bool PermGroup::same_group(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  for (const auto& g : generators_) {
    if (!other.contains(g)) return false;
  }
  for (const auto& g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

}  // namespace qsym
