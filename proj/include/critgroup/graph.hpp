#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "critgroup/int_matrix.hpp"

namespace critgroup {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  unsigned mult = 1;
};

/// Finite loopless multigraph on vertices 0..n-1.
///
/// Each unordered pair is stored once as (min, max) with multiplicity >= 1;
/// absent pairs have multiplicity 0. Values are immutable once built.
class Multigraph {
 public:
  using PairMap = std::map<std::pair<std::size_t, std::size_t>, unsigned>;

  Multigraph() = default;

  /// Builds a graph from an edge list. Repeated pairs (in either orientation)
  /// have their multiplicities summed; zero-multiplicity entries are ignored.
  /// Throws std::invalid_argument for self-loops or out-of-range endpoints.
  Multigraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return n_; }
  unsigned multiplicity(std::size_t u, std::size_t v) const;
  unsigned degree(std::size_t u) const;

  /// Sum of all multiplicities.
  std::size_t edge_count() const noexcept;
  const PairMap& pairs() const noexcept { return pairs_; }
  std::vector<Edge> edges() const;

  bool is_simple() const noexcept;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_ = 0;
  PairMap pairs_;
};

Multigraph path(std::size_t n);
Multigraph complete(std::size_t m);

/// Simple complement: a pair is present iff its multiplicity in g is 0.
Multigraph complement(const Multigraph& g);

/// Vertices of g2 are shifted by g1.vertex_count().
Multigraph disjoint_union(const Multigraph& g1, const Multigraph& g2);

/// Disjoint union plus one edge between every vertex of g1 and every vertex of g2.
Multigraph join(const Multigraph& g1, const Multigraph& g2);

IntMatrix laplacian(const Multigraph& g);

std::size_t connected_components(const Multigraph& g);

}  // namespace critgroup
