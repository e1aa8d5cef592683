#pragma once

#include <cstddef>
#include <vector>

#include "critgroup/critical_group.hpp"

namespace critgroup {

/// Sequences a_l, b_l (l = 1..n) driving the K_m ∨ P_n closed form:
///   a_1 = 1, a_2 = m+2, a_l = (m+2)a_{l-1} − a_{l-2}
///   b_1 = 0, b_2 = n−2, b_l = (m+2)b_{l-1} − b_{l-2} + (n−l+1)
struct AbSequence {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<BigInt> a;  // a[l-1] == a_l
  std::vector<BigInt> b;

  const BigInt& a_at(std::size_t l) const { return a.at(l - 1); }
  const BigInt& b_at(std::size_t l) const { return b.at(l - 1); }
};

/// m >= 1, n >= 2.
AbSequence seq_ab(std::size_t m, std::size_t n);

/// a_l alone, for m >= 1 and l >= 1.
BigInt a_term(std::size_t m, std::size_t l);

/// m >= 2, n >= 2.
AbelianGroup km_pn_group(std::size_t m, std::size_t n);

/// (m+n)^{m−1} · a_n. Defined for m >= 2, n >= 1 (n = 1 gives K_{m+1}).
BigInt km_pn_tree_count(std::size_t m, std::size_t n);

struct PqSequence {
  std::vector<BigInt> p;  // p_0..p_{m-3}
  std::vector<BigInt> q;
};

struct CdSequence {
  std::vector<BigInt> c;  // c_0..c_{n-3}
  std::vector<BigInt> d;
};

/// p_0 = n+3, q_0 = 0, p_k = (n+2)p_{k−1} + q_{k−1}, q_k = 1 − p_{k−1}; k < m−2.
PqSequence seq_pq(std::size_t m, std::size_t n);

/// c_0 = m+3, d_0 = 0, c_k = (m+2)c_{k−1} + d_{k−1}, d_k = 1 − c_{k−1}; k < n−2.
CdSequence seq_cd(std::size_t m, std::size_t n);

struct PmPnParams {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<BigInt> p, q, c, d;
  BigInt p_prime;  // (n+1)p_{m−3} − p_{m−4} + 1
  BigInt alpha;    // 1 + Σ p_k
  BigInt beta;     // 1 + Σ c_k
};

/// m >= 4, n >= 4. Checks n·alpha == p_prime − m and throws std::logic_error
/// if the two routes disagree.
PmPnParams pm_pn_params(std::size_t m, std::size_t n);

/// Z/t ⊕ Z/s with t = gcd(mβ+n, αβ−1, p′), s = (mβ+n)p′/t.
AbelianGroup pm_pn_group(std::size_t m, std::size_t n);

/// (mβ + n) · p′.
BigInt pm_pn_tree_count(std::size_t m, std::size_t n);

enum class Family { kKmPn, kPmPn };

struct EigenProductCheck {
  double trig_product = 0;    // product of nontrivial Laplacian eigenvalues (scaled)
  double radical_value = 0;   // radical closed form
  double exact_value = 0;     // exact integer from the recurrences
  double trig_rel_error = 0;  // |trig − exact| / exact
  double radical_rel_error = 0;

  double worst() const { return trig_rel_error > radical_rel_error ? trig_rel_error : radical_rel_error; }
};

/// Largest parameter accepted by eigen_product_check.
inline constexpr std::size_t kEigenCheckMaxParam = 64;

/// Relative error allowed between the floating products and the exact counts.
inline constexpr double kEigenRelTolerance = 1e-9;

/// Floating cross-check of the eigenvalue product identities.
///
/// kKmPn compares ∏_{j=1}^{n−1}(m+2+2cos(πj/n)) and its radical form against a_n.
/// kPmPn compares the two-factor product against (mβ+n)·p′ (for m, n < 4 the
/// exact side falls back to a_m(n)·a_n(m)). Parameters must lie in [1, 64].
EigenProductCheck eigen_product_check(std::size_t m, std::size_t n, Family family);

/// Radical closed form of a_l in floating point.
double radical_a(std::size_t m, std::size_t l);

/// Radical closed form of b_l (with its −(n−l)/m correction) in floating point.
double radical_b(std::size_t m, std::size_t n, std::size_t l);

/// Radical closed forms of p_k and c_k in floating point.
double radical_p(std::size_t n, std::size_t k);
double radical_c(std::size_t m, std::size_t k);

}  // namespace critgroup
