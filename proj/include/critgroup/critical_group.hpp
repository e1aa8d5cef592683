#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "critgroup/graph.hpp"
#include "critgroup/snf.hpp"

namespace critgroup {

/// Finitely generated abelian group Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k with
/// every t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroup {
  std::vector<BigInt> torsion;
  std::size_t free_rank = 0;

  /// Drops unit factors and counts zeros as free rank. The input must already
  /// be a divisibility chain with zeros last.
  static AbelianGroup from_invariant_factors(std::span<const BigInt> factors);

  /// Normalizes an arbitrary multiset of positive cyclic orders into a chain.
  static AbelianGroup from_cyclic_orders(std::span<const BigInt> orders);

  bool is_finite() const noexcept { return free_rank == 0; }

  /// Product of the torsion factors. Throws std::logic_error when the group
  /// has positive free rank.
  BigInt order() const;

  std::string describe() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Invariant factors of the Laplacian with row `row` and column `col` struck.
SnfResult reduced_laplacian_snf(const Multigraph& g, std::size_t row = 0, std::size_t col = 0,
                                Transforms transforms = Transforms::kSkip);

/// Cokernel of the reduced Laplacian (strike row 0, col 0). Disconnected graphs
/// are accepted and report positive free rank. Needs at least 2 vertices.
AbelianGroup critical_group(const Multigraph& g);

/// Matrix-Tree count; 1 for a single vertex, 0 iff disconnected.
BigInt spanning_tree_count(const Multigraph& g);

SnfResult full_laplacian_snf(const Multigraph& g, Transforms transforms = Transforms::kSkip);

/// Diagonal scalar used for the leading block of the K_m join reduction.
/// kMPlusN is the correct one; kMPlusOne reproduces a misprinted variant and
/// exists so tests can show that it breaks the equivalence.
enum class JoinScalar { kMPlusN, kMPlusOne };

/// Block matrix (c·I_n − L(g^c)) ⊕ (m+n)·I_{m−2} ⊕ I_1 ⊕ 0_1 with c = m+n
/// (or m+1), n = |V(g)|. With kMPlusN it is equivalent to L(K_m ∨ g).
/// Requires m >= 2 and a simple g.
IntMatrix km_join_reduced_blocks(const Multigraph& g, std::size_t m,
                                 JoinScalar scalar = JoinScalar::kMPlusN);

}  // namespace critgroup
