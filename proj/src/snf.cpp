#include "critgroup/snf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

// Quotient rounded to nearest, so the remainder satisfies |r| <= |b| / 2.
BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
  BigInt quot, rem;
  boost::multiprecision::divide_qr(a, b, quot, rem);
  if (2 * abs(rem) > abs(b)) {
    quot += ((rem < 0) == (b < 0)) ? 1 : -1;
  }
  return quot;
}

// new_i = x*row_i + y*row_j, new_j = z*row_i + w*row_j
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& x, const BigInt& y,
                  const BigInt& z, const BigInt& w) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt ri = m(i, c), rj = m(j, c);
    m(i, c) = x * ri + y * rj;
    m(j, c) = z * ri + w * rj;
  }
}

// new_i = x*col_i + y*col_j, new_j = z*col_i + w*col_j
void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const BigInt& x, const BigInt& y,
                  const BigInt& z, const BigInt& w) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt ci = m(r, i), cj = m(r, j);
    m(r, i) = x * ci + y * cj;
    m(r, j) = z * ci + w * cj;
  }
}

// Working matrix D = P * A * Q. Row operations are mirrored onto P and column
// operations onto Q when transforms are tracked.
class Reducer {
 public:
  Reducer(const IntMatrix& a, Transforms transforms) : d_(a) {
    if (transforms == Transforms::kTrack) {
      p_ = IntMatrix::identity(a.rows());
      q_ = IntMatrix::identity(a.cols());
    }
  }

  SnfResult run() {
    const std::size_t r = std::min(d_.rows(), d_.cols());
    for (std::size_t t = 0; t < r; ++t) {
      if (!eliminate(t)) break;
    }
    enforce_divisibility(r);
    SnfResult result;
    result.s.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      if (d_(i, i) < 0) negate_row(i);
      result.s.push_back(d_(i, i));
    }
    result.p = std::move(p_);
    result.q = std::move(q_);
    return result;
  }

 private:
  // Clears row t and column t around a pivot at (t, t). Returns false when the
  // block d[t:, t:] is already zero.
  bool eliminate(std::size_t t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!min_pivot(t, pi, pj)) return false;
      swap_rows(t, pi);
      swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d_.rows(); ++i) {
        if (d_(i, t) == 0) continue;
        add_row(i, t, -nearest_quotient(d_(i, t), d_(t, t)));
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d_.cols(); ++j) {
        if (d_(t, j) == 0) continue;
        add_col(j, t, -nearest_quotient(d_(t, j), d_(t, t)));
        if (d_(t, j) != 0) clean = false;
      }
      if (clean) return true;
    }
  }

  bool min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < d_.rows(); ++i) {
      for (std::size_t j = t; j < d_.cols(); ++j) {
        const BigInt& x = d_(i, j);
        if (x == 0) continue;
        BigInt mag = abs(x);
        if (!found || mag < best) {
          found = true;
          best = std::move(mag);
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  // Replaces each diagonal pair (a, b) with a ∤ b by (gcd, lcm). After the
  // inner loop for i, d_i divides every later entry.
  void enforce_divisibility(std::size_t r) {
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        const BigInt a = d_(i, i);
        const BigInt b = d_(j, j);
        if (b == 0) continue;
        if (a == 0) {
          swap_rows(i, j);
          swap_cols(i, j);
          continue;
        }
        if (b % a == 0) continue;
        BigInt x, y;
        const BigInt g = ext_gcd(a, b, x, y);
        const BigInt a_g = exact_div(a, g);
        const BigInt b_g = exact_div(b, g);
        // [x y; -b/g a/g] * diag(a, b) * [1 -y·b/g; 1 x·a/g] = diag(g, a·b/g)
        combine_rows(d_, i, j, x, y, -b_g, a_g);
        if (p_) combine_rows(*p_, i, j, x, y, -b_g, a_g);
        combine_cols(d_, i, j, 1, 1, -y * b_g, x * a_g);
        if (q_) combine_cols(*q_, i, j, 1, 1, -y * b_g, x * a_g);
        if (d_(i, j) != 0 || d_(j, i) != 0) {
          throw std::logic_error("snf: gcd/lcm step left off-diagonal residue");
        }
      }
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    d_.swap_rows(a, b);
    if (p_) p_->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d_.swap_cols(a, b);
    if (q_) q_->swap_cols(a, b);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& f) {
    d_.add_row_multiple(dst, src, f);
    if (p_) p_->add_row_multiple(dst, src, f);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& f) {
    d_.add_col_multiple(dst, src, f);
    if (q_) q_->add_col_multiple(dst, src, f);
  }
  void negate_row(std::size_t i) {
    d_.negate_row(i);
    if (p_) p_->negate_row(i);
  }

  IntMatrix d_;
  std::optional<IntMatrix> p_;
  std::optional<IntMatrix> q_;
};

// Cofactor expansion along the first row. Only used on the tiny minors of
// gcd_minors_invariants, where it keeps the oracle free of elimination code.
BigInt cofactor_det(const IntMatrix& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return a(rows[0], cols[0]);
  BigInt total = 0;
  std::vector<std::size_t> rest(k - 1);
  for (std::size_t c = 0; c < k; ++c) {
    const BigInt& x = a(rows[0], cols[c]);
    if (x == 0) continue;
    for (std::size_t j = 0, o = 0; j < k; ++j)
      if (j != c) rest[o++] = cols[j];
    BigInt minor = cofactor_det(a, rows.subspan(1), rest);
    if (c % 2 == 0)
      total += x * minor;
    else
      total -= x * minor;
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

SnfResult snf(const IntMatrix& a, Transforms transforms) {
  return Reducer(a, transforms).run();
}

std::vector<BigInt> gcd_minors_invariants(const IntMatrix& a) {
  const std::size_t r = std::min(a.rows(), a.cols());
  if (r > kMinorOracleMaxDim) {
    throw UnsupportedSize("gcd_minors_invariants: min dimension " + std::to_string(r) +
                          " exceeds " + std::to_string(kMinorOracleMaxDim));
  }
  std::vector<BigInt> t;
  t.reserve(r);
  BigInt prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    if (prev == 0) {
      t.emplace_back(0);
      continue;
    }
    BigInt delta = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (delta == 1) return;
        delta = gcd(delta, cofactor_det(a, rows, cols));
      });
    });
    t.push_back(delta == 0 ? BigInt(0) : exact_div(delta, prev));
    prev = delta;
  }
  return t;
}

BigInt determinant(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool matrices_equivalent(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrices_equivalent: dimension mismatch");
  }
  return snf(a).s == snf(b).s;
}

bool is_divisibility_chain(std::span<const BigInt> s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (s[i] == 0) {
      if (s[i + 1] != 0) return false;
      continue;
    }
    if (s[i + 1] % s[i] != 0) return false;
  }
  return s.empty() || s.back() >= 0;
}

}  // namespace critgroup
