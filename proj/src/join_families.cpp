#include "critgroup/join_families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

BigInt power(const BigInt& base, std::size_t exp) {
  BigInt out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

double to_double(const BigInt& x) { return x.convert_to<double>(); }

// ∏_{j=1}^{len−1} (shift + 2 + 2cos(πj/len))
double cosine_product(std::size_t shift, std::size_t len) {
  double prod = 1.0;
  for (std::size_t j = 1; j < len; ++j) {
    prod *= static_cast<double>(shift) + 2.0 +
            2.0 * std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(len));
  }
  return prod;
}

double rel_error(double value, double exact) { return std::abs(value - exact) / std::abs(exact); }

}  // namespace

AbSequence seq_ab(std::size_t m, std::size_t n) {
  require(m >= 1 && n >= 2, "seq_ab: need m >= 1 and n >= 2");
  AbSequence seq{m, n, {}, {}};
  seq.a.reserve(n);
  seq.b.reserve(n);
  const BigInt k = m + 2;
  seq.a = {BigInt(1), k};
  seq.b = {BigInt(0), BigInt(n) - 2};
  for (std::size_t l = 3; l <= n; ++l) {
    seq.a.push_back(k * seq.a[l - 2] - seq.a[l - 3]);
    seq.b.push_back(k * seq.b[l - 2] - seq.b[l - 3] + (BigInt(n) - l + 1));
  }
  return seq;
}

BigInt a_term(std::size_t m, std::size_t l) {
  require(m >= 1 && l >= 1, "a_term: need m >= 1 and l >= 1");
  const BigInt k = m + 2;
  BigInt prev = 1, cur = k;
  if (l == 1) return prev;
  for (std::size_t i = 3; i <= l; ++i) {
    BigInt next = k * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

AbelianGroup km_pn_group(std::size_t m, std::size_t n) {
  require(m >= 2 && n >= 2, "km_pn_group: need m >= 2 and n >= 2");
  const AbSequence seq = seq_ab(m, n);
  const BigInt m_plus_n = m + n;
  const BigInt& a_n = seq.a_at(n);
  const BigInt& b_n = seq.b_at(n);
  const BigInt g0 = gcd(gcd(m_plus_n, a_n), b_n);

  std::vector<BigInt> orders;
  orders.reserve(m);
  orders.push_back(g0);
  for (std::size_t i = 0; i + 2 < m; ++i) orders.push_back(m_plus_n);
  orders.push_back(exact_div(m_plus_n * a_n, g0));
  return AbelianGroup::from_cyclic_orders(orders);
}

BigInt km_pn_tree_count(std::size_t m, std::size_t n) {
  require(m >= 2 && n >= 1, "km_pn_tree_count: need m >= 2 and n >= 1");
  return power(BigInt(m + n), m - 1) * a_term(m, n);
}

PqSequence seq_pq(std::size_t m, std::size_t n) {
  require(m >= 4 && n >= 2, "seq_pq: need m >= 4 and n >= 2");
  PqSequence s;
  s.p = {BigInt(n + 3)};
  s.q = {BigInt(0)};
  for (std::size_t k = 1; k + 2 < m; ++k) {
    s.p.push_back((n + 2) * s.p[k - 1] + s.q[k - 1]);
    s.q.push_back(1 - s.p[k - 1]);
  }
  return s;
}

CdSequence seq_cd(std::size_t m, std::size_t n) {
  require(m >= 2 && n >= 4, "seq_cd: need m >= 2 and n >= 4");
  CdSequence s;
  s.c = {BigInt(m + 3)};
  s.d = {BigInt(0)};
  for (std::size_t k = 1; k + 2 < n; ++k) {
    s.c.push_back((m + 2) * s.c[k - 1] + s.d[k - 1]);
    s.d.push_back(1 - s.c[k - 1]);
  }
  return s;
}

PmPnParams pm_pn_params(std::size_t m, std::size_t n) {
  require(m >= 4 && n >= 4, "pm_pn_params: need m >= 4 and n >= 4");
  PmPnParams out;
  out.m = m;
  out.n = n;
  auto [p, q] = seq_pq(m, n);
  auto [c, d] = seq_cd(m, n);
  out.p = std::move(p);
  out.q = std::move(q);
  out.c = std::move(c);
  out.d = std::move(d);

  out.p_prime = (n + 1) * out.p[m - 3] - out.p[m - 4] + 1;
  out.alpha = 1;
  for (const BigInt& x : out.p) out.alpha += x;
  out.beta = 1;
  for (const BigInt& x : out.c) out.beta += x;

  if (n * out.alpha != out.p_prime - m) {
    throw std::logic_error("pm_pn_params: n*alpha != p' - m at m=" + std::to_string(m) +
                           ", n=" + std::to_string(n));
  }
  return out;
}

AbelianGroup pm_pn_group(std::size_t m, std::size_t n) {
  const PmPnParams prm = pm_pn_params(m, n);
  const BigInt first = m * prm.beta + n;
  const BigInt t = gcd(gcd(first, prm.alpha * prm.beta - 1), prm.p_prime);
  const BigInt s = exact_div(first * prm.p_prime, t);
  const std::vector<BigInt> orders{t, s};
  return AbelianGroup::from_cyclic_orders(orders);
}

BigInt pm_pn_tree_count(std::size_t m, std::size_t n) {
  const PmPnParams prm = pm_pn_params(m, n);
  return (m * prm.beta + n) * prm.p_prime;
}

double radical_a(std::size_t m, std::size_t l) {
  const double md = static_cast<double>(m);
  const double r = std::sqrt(md * md + 4.0 * md);
  const double up = (md + 2.0 + r) / 2.0;
  const double down = (md + 2.0 - r) / 2.0;
  const double ld = static_cast<double>(l);
  return (std::pow(up, ld) - std::pow(down, ld)) / r;
}

double radical_b(std::size_t m, std::size_t n, std::size_t l) {
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double r = std::sqrt(md * md + 4.0 * md);
  const double up = (md + 2.0 + r) / 2.0;
  const double down = (md + 2.0 - r) / 2.0;
  const double denom = 4.0 * md * md * (md + 4.0);
  const double e = (md * md - md - (md + 1.0) * r + 2.0 * md * nd) * (md + 4.0 - r) / denom;
  const double f = (md - md * md - (md + 1.0) * r - 2.0 * md * nd) * (md + 4.0 + r) / denom;
  const double ld = static_cast<double>(l);
  return e * std::pow(up, ld) - f * std::pow(down, ld) - (nd - ld) / md;
}

namespace {

// Shared closed form of p_k (parameter n) and c_k (parameter m).
double radical_pc(std::size_t param, std::size_t k) {
  const double v = static_cast<double>(param);
  const double r = std::sqrt(v * v + 4.0 * v);
  const double x = (v * v + 3.0 * v + 1.0) / (2.0 * v);
  const double y = (v * v + 5.0 * v + 5.0) / (2.0 * r);
  const double kd = static_cast<double>(k);
  return (x + y) * std::pow((v + 2.0 + r) / 2.0, kd) +
         (x - y) * std::pow((v + 2.0 - r) / 2.0, kd) - 1.0 / v;
}

}  // namespace

double radical_p(std::size_t n, std::size_t k) { return radical_pc(n, k); }
double radical_c(std::size_t m, std::size_t k) { return radical_pc(m, k); }

EigenProductCheck eigen_product_check(std::size_t m, std::size_t n, Family family) {
  if (m < 1 || n < 1) throw std::invalid_argument("eigen_product_check: need m, n >= 1");
  if (m > kEigenCheckMaxParam || n > kEigenCheckMaxParam) {
    throw UnsupportedSize("eigen_product_check: parameters above " +
                          std::to_string(kEigenCheckMaxParam));
  }

  EigenProductCheck out;
  if (family == Family::kKmPn) {
    out.trig_product = cosine_product(m, n);
    out.radical_value = radical_a(m, n);
    out.exact_value = to_double(a_term(m, n));
  } else {
    out.trig_product = cosine_product(n, m) * cosine_product(m, n);
    out.radical_value = radical_a(n, m) * radical_a(m, n);
    out.exact_value = (m >= 4 && n >= 4) ? to_double(pm_pn_tree_count(m, n))
                                         : to_double(a_term(n, m) * a_term(m, n));
  }
  out.trig_rel_error = rel_error(out.trig_product, out.exact_value);
  out.radical_rel_error = rel_error(out.radical_value, out.exact_value);
  return out;
}

}  // namespace critgroup
