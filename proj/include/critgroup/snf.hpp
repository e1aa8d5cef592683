#pragma once

#include <optional>
#include <span>
#include <vector>

#include "critgroup/int_matrix.hpp"

namespace critgroup {

struct SnfResult {
  /// Invariant factors s_1..s_r, r = min(rows, cols). Non-negative, each
  /// dividing the next, zeros last.
  std::vector<BigInt> s;
  /// Unimodular transforms with p * a * q == diag(s); set only on request.
  std::optional<IntMatrix> p;
  std::optional<IntMatrix> q;
};

enum class Transforms { kSkip, kTrack };

/// Smith normal form of an arbitrary rectangular integer matrix.
///
/// Elimination picks the nonzero entry of least magnitude in the remaining
/// block as pivot and clears its row and column by repeated division with
/// remainder. The resulting diagonal is then brought into a divisibility chain
/// with 2x2 gcd/lcm steps and finally sign-normalized.
SnfResult snf(const IntMatrix& a, Transforms transforms = Transforms::kSkip);

/// Largest minor dimension accepted by gcd_minors_invariants.
inline constexpr std::size_t kMinorOracleMaxDim = 6;

/// Invariant factors by definition: t_i = Δ_i / Δ_{i-1} where Δ_i is the gcd of
/// all i×i minors. Exhaustive, so min(rows, cols) is capped at
/// kMinorOracleMaxDim (UnsupportedSize beyond that).
std::vector<BigInt> gcd_minors_invariants(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws std::invalid_argument for non-square input.
BigInt determinant(const IntMatrix& a);

/// Same dimensions and same invariant factors. Throws std::invalid_argument
/// when dimensions differ.
bool matrices_equivalent(const IntMatrix& a, const IntMatrix& b);

bool is_divisibility_chain(std::span<const BigInt> s);

}  // namespace critgroup
