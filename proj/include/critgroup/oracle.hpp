#pragma once

#include <cstddef>

#include "critgroup/bigint.hpp"
#include "critgroup/graph.hpp"

namespace critgroup {

inline constexpr std::size_t kTreeOracleMaxVertices = 9;
inline constexpr std::size_t kTreeOracleMaxSlots = 32;

/// Whether spanning_trees_bruteforce accepts g.
bool within_tree_oracle_guard(const Multigraph& g) noexcept;

/// Counts spanning trees by enumerating (n−1)-subsets of edge slots, each
/// parallel edge being its own slot, with an incremental union-find filter.
/// Throws UnsupportedSize past kTreeOracleMaxVertices / kTreeOracleMaxSlots.
BigInt spanning_trees_bruteforce(const Multigraph& g);

}  // namespace critgroup
