#include "critgroup/critical_group.hpp"

#include <sstream>
#include <stdexcept>

namespace critgroup {

AbelianGroup AbelianGroup::from_invariant_factors(std::span<const BigInt> factors) {
  if (!is_divisibility_chain(factors)) {
    throw std::invalid_argument("AbelianGroup: factors are not a divisibility chain");
  }
  AbelianGroup g;
  for (const BigInt& f : factors) {
    if (f == 0)
      ++g.free_rank;
    else if (f != 1)
      g.torsion.push_back(f);
  }
  return g;
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::span<const BigInt> orders) {
  for (const BigInt& x : orders) {
    if (x <= 0) throw std::invalid_argument("AbelianGroup: cyclic orders must be positive");
  }
  return from_invariant_factors(snf(IntMatrix::diagonal(orders)).s);
}

BigInt AbelianGroup::order() const {
  if (free_rank != 0) throw std::logic_error("AbelianGroup::order: group is infinite");
  BigInt prod = 1;
  for (const BigInt& t : torsion) prod *= t;
  return prod;
}

std::string AbelianGroup::describe() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (const BigInt& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

SnfResult reduced_laplacian_snf(const Multigraph& g, std::size_t row, std::size_t col,
                                Transforms transforms) {
  return snf(delete_row_col(laplacian(g), row, col), transforms);
}

AbelianGroup critical_group(const Multigraph& g) {
  if (g.vertex_count() < 2) {
    throw std::invalid_argument("critical_group: need at least 2 vertices");
  }
  return AbelianGroup::from_invariant_factors(reduced_laplacian_snf(g).s);
}

BigInt spanning_tree_count(const Multigraph& g) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("spanning_tree_count: empty graph");
  }
  if (g.vertex_count() == 1) return 1;
  return abs(determinant(delete_row_col(laplacian(g), 0, 0)));
}

SnfResult full_laplacian_snf(const Multigraph& g, Transforms transforms) {
  if (g.vertex_count() == 0) {
    throw std::invalid_argument("full_laplacian_snf: empty graph");
  }
  return snf(laplacian(g), transforms);
}

IntMatrix km_join_reduced_blocks(const Multigraph& g, std::size_t m, JoinScalar scalar) {
  if (m < 2) throw std::invalid_argument("km_join_reduced_blocks: m must be at least 2");
  if (!g.is_simple()) throw std::invalid_argument("km_join_reduced_blocks: g must be simple");

  const std::size_t n = g.vertex_count();
  const BigInt m_plus_n = m + n;
  const BigInt lead = scalar == JoinScalar::kMPlusN ? m_plus_n : BigInt(m + 1);

  IntMatrix head = laplacian(complement(g));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) head(i, j) = (i == j ? lead : BigInt(0)) - head(i, j);

  IntMatrix middle(m - 2, m - 2);
  for (std::size_t i = 0; i < m - 2; ++i) middle(i, i) = m_plus_n;

  return direct_sum(direct_sum(direct_sum(head, middle), IntMatrix::identity(1)), IntMatrix(1, 1));
}

}  // namespace critgroup
