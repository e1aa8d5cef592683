#include "critgroup/oracle.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

// Union-find with undo; union by size, no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

struct Enumerator {
  const std::vector<std::pair<std::size_t, std::size_t>>& slots;
  std::size_t target;
  RollbackDsu dsu;
  std::uint64_t count = 0;

  void run(std::size_t start, std::size_t chosen) {
    if (chosen == target) {
      ++count;
      return;
    }
    const std::size_t needed = target - chosen;
    for (std::size_t i = start; i + needed <= slots.size(); ++i) {
      if (!dsu.unite(slots[i].first, slots[i].second)) continue;
      run(i + 1, chosen + 1);
      dsu.undo();
    }
  }
};

std::size_t slot_count(const Multigraph& g) { return g.edge_count(); }

}  // namespace

bool within_tree_oracle_guard(const Multigraph& g) noexcept {
  return g.vertex_count() >= 1 && g.vertex_count() <= kTreeOracleMaxVertices &&
         slot_count(g) <= kTreeOracleMaxSlots;
}

BigInt spanning_trees_bruteforce(const Multigraph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("spanning_trees_bruteforce: empty graph");
  }
  if (g.vertex_count() > kTreeOracleMaxVertices) {
    throw UnsupportedSize("spanning_trees_bruteforce: " + std::to_string(g.vertex_count()) +
                          " vertices exceeds " + std::to_string(kTreeOracleMaxVertices));
  }
  if (slot_count(g) > kTreeOracleMaxSlots) {
    throw UnsupportedSize("spanning_trees_bruteforce: " + std::to_string(slot_count(g)) +
                          " edge slots exceeds " + std::to_string(kTreeOracleMaxSlots));
  }

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (const Edge& e : g.edges())
    for (unsigned k = 0; k < e.mult; ++k) slots.emplace_back(e.u, e.v);

  Enumerator walk{slots, g.vertex_count() - 1, RollbackDsu(g.vertex_count())};
  walk.run(0, 0);
  return BigInt(walk.count);
}

}  // namespace critgroup
