#include "critgroup/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>

#include "critgroup/critical_group.hpp"
#include "critgroup/errors.hpp"
#include "critgroup/io.hpp"
#include "critgroup/oracle.hpp"
#include "critgroup/snf.hpp"

namespace critgroup {

namespace {

std::string join_strings(const std::vector<BigInt>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].str();
  return out + "]";
}

Check make_check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)};
}

Check skip_check(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::kSkip, std::move(detail)};
}

std::size_t parse_size(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

Multigraph family_graph(Family family, std::size_t m, std::size_t n) {
  return family == Family::kKmPn ? join(complete(m), path(n)) : join(path(m), path(n));
}

std::string family_subject(Family family, std::size_t m, std::size_t n) {
  std::ostringstream os;
  os << (family == Family::kKmPn ? "K_" : "P_") << m << " v P_" << n << " (m=" << m
     << ", n=" << n << ")";
  return os.str();
}

bool closed_form_supported(Family family, std::size_t m, std::size_t n) {
  return family == Family::kKmPn ? (m >= 2 && n >= 2) : (m >= 4 && n >= 4);
}

AbelianGroup closed_form_group(Family family, std::size_t m, std::size_t n) {
  return family == Family::kKmPn ? km_pn_group(m, n) : pm_pn_group(m, n);
}

BigInt closed_form_tree_count(Family family, std::size_t m, std::size_t n) {
  return family == Family::kKmPn ? km_pn_tree_count(m, n) : pm_pn_tree_count(m, n);
}

// Full list of invariant factors of a connected graph on `vertices` vertices
// from its critical group: leading units, then torsion.
std::vector<BigInt> padded_factors(const AbelianGroup& g, std::size_t vertices) {
  std::vector<BigInt> out(vertices - 1 - g.torsion.size(), BigInt(1));
  out.insert(out.end(), g.torsion.begin(), g.torsion.end());
  return out;
}

// One verify cell for one family.
void verify_family(Family family, std::size_t m, std::size_t n, std::vector<Check>& out) {
  const std::string tag = std::string("m=") + std::to_string(m) + " n=" + std::to_string(n) +
                          (family == Family::kKmPn ? " km-pn " : " pm-pn ");
  const Multigraph g = family_graph(family, m, n);
  const AbelianGroup generic = critical_group(g);
  const BigInt trees = spanning_tree_count(g);

  if (closed_form_supported(family, m, n)) {
    const AbelianGroup closed = closed_form_group(family, m, n);
    out.push_back(make_check(tag + "closed-form = snf", closed == generic,
                             "closed " + join_strings(closed.torsion) + ", snf " +
                                 join_strings(generic.torsion)));
  } else {
    out.push_back(skip_check(tag + "closed-form = snf", "outside closed-form range"));
  }

  bool order_ok = generic.is_finite() && generic.order() == trees;
  std::string order_detail = "det " + trees.str();
  if (family == Family::kKmPn ? m >= 2 : closed_form_supported(family, m, n)) {
    const BigInt formula = closed_form_tree_count(family, m, n);
    order_ok = order_ok && formula == trees;
    order_detail += ", formula " + formula.str();
  }
  out.push_back(make_check(tag + "order law", order_ok, order_detail));

  if (within_tree_oracle_guard(g)) {
    const BigInt brute = spanning_trees_bruteforce(g);
    out.push_back(make_check(tag + "tree oracle", brute == trees, "enumerated " + brute.str()));
  } else {
    out.push_back(skip_check(tag + "tree oracle", "exceeds oracle guard"));
  }

  if (family == Family::kKmPn) {
    if (m >= 2) {
      const IntMatrix lap = laplacian(g);
      const bool m_plus_n = matrices_equivalent(km_join_reduced_blocks(path(n), m), lap);
      const bool m_plus_one =
          matrices_equivalent(km_join_reduced_blocks(path(n), m, JoinScalar::kMPlusOne), lap);
      out.push_back(make_check(tag + "join block reduction", m_plus_n,
                               std::string("scalar m+n ") + (m_plus_n ? "equivalent" : "NOT equivalent") +
                                   "; scalar m+1 " +
                                   (m_plus_one ? "equivalent" : "not equivalent")));
    } else {
      out.push_back(skip_check(tag + "join block reduction", "needs m >= 2"));
    }
  }

  if (m <= kEigenCheckMaxParam && n <= kEigenCheckMaxParam) {
    const EigenProductCheck e = eigen_product_check(m, n, family);
    std::ostringstream detail;
    detail << "max relative error " << e.worst();
    out.push_back(make_check(tag + "eigenvalue product", e.worst() < kEigenRelTolerance,
                             detail.str()));
  } else {
    out.push_back(skip_check(tag + "eigenvalue product", "parameters above float guard"));
  }
}

}  // namespace

Range parse_range(std::string_view text) {
  Range r;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    r.lo = parse_size(text.substr(0, dots), "range");
    r.hi = parse_size(text.substr(dots + 2), "range");
  } else {
    r.lo = r.hi = parse_size(text, "range");
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

Engine parse_engine(std::string_view text) {
  if (text == "closed-form") return Engine::kClosedForm;
  if (text == "snf") return Engine::kSnf;
  if (text == "both") return Engine::kBoth;
  throw UsageError("unknown engine '" + std::string(text) + "'");
}

Family parse_family(std::string_view text) {
  if (text == "km-pn") return Family::kKmPn;
  if (text == "pm-pn") return Family::kPmPn;
  throw UsageError("unknown family '" + std::string(text) + "'");
}

Report cmd_family(Family family, std::size_t m, std::size_t n, Engine engine) {
  if (m < 1 || n < 1) throw UsageError("family parameters must satisfy m >= 1 and n >= 1");

  Report report;
  report.subject = family_subject(family, m, n);
  if (engine != Engine::kSnf && !closed_form_supported(family, m, n)) {
    report.notices.push_back(std::string("closed form needs ") +
                             (family == Family::kKmPn ? "m >= 2, n >= 2" : "m >= 4, n >= 4") +
                             "; using the snf engine");
    engine = Engine::kSnf;
  }

  std::optional<AbelianGroup> closed;
  std::optional<BigInt> closed_trees;
  if (engine != Engine::kSnf) {
    closed = closed_form_group(family, m, n);
    closed_trees = closed_form_tree_count(family, m, n);
  }

  if (engine == Engine::kClosedForm) {
    report.invariant_factors = padded_factors(*closed, m + n);
    report.torsion = closed->torsion;
    report.free_rank = closed->free_rank;
    report.spanning_trees = *closed_trees;
    report.checks.push_back(make_check("order law", closed->order() == *closed_trees,
                                       "torsion product vs tree-count formula"));
    return report;
  }

  const Multigraph g = family_graph(family, m, n);
  const SnfResult reduced = reduced_laplacian_snf(g);
  const AbelianGroup generic = AbelianGroup::from_invariant_factors(reduced.s);
  const BigInt trees = spanning_tree_count(g);
  report.invariant_factors = reduced.s;
  report.torsion = generic.torsion;
  report.free_rank = generic.free_rank;
  report.spanning_trees = trees;
  report.checks.push_back(make_check("order law", generic.is_finite() && generic.order() == trees,
                                     "torsion product vs |det reduced Laplacian|"));
  if (closed) {
    report.checks.push_back(make_check("closed-form = snf", *closed == generic,
                                       "closed " + join_strings(closed->torsion) + ", snf " +
                                           join_strings(generic.torsion)));
    report.checks.push_back(make_check("tree count formula", *closed_trees == trees,
                                       "formula " + closed_trees->str() + ", det " + trees.str()));
  }
  return report;
}

Report cmd_graph(const Multigraph& g, std::string subject) {
  if (g.vertex_count() == 0) throw UsageError("graph has no vertices");
  Report report;
  report.subject = std::move(subject);
  const BigInt trees = spanning_tree_count(g);
  if (g.vertex_count() >= 2) {
    const SnfResult reduced = reduced_laplacian_snf(g);
    const AbelianGroup group = AbelianGroup::from_invariant_factors(reduced.s);
    report.invariant_factors = reduced.s;
    report.torsion = group.torsion;
    report.free_rank = group.free_rank;
    if (group.is_finite()) {
      report.checks.push_back(make_check("order law", group.order() == trees,
                                         "torsion product vs |det reduced Laplacian|"));
    }
  }
  if (report.free_rank == 0) report.spanning_trees = trees;

  if (within_tree_oracle_guard(g)) {
    const BigInt brute = spanning_trees_bruteforce(g);
    report.checks.push_back(make_check("tree oracle", brute == trees, "enumerated " + brute.str()));
  } else {
    report.checks.push_back(skip_check("tree oracle", "exceeds oracle guard"));
  }
  return report;
}

Report cmd_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return cmd_graph(read_edge_list(in), path);
}

Report cmd_snf(const IntMatrix& a, bool show_transforms, std::string subject) {
  Report report;
  report.subject = std::move(subject);
  SnfResult r = snf(a, show_transforms ? Transforms::kTrack : Transforms::kSkip);
  report.invariant_factors = r.s;
  std::size_t nonzero = 0;
  for (const BigInt& x : r.s) {
    if (x != 0) ++nonzero;
    if (x > 1) report.torsion.push_back(x);
  }
  report.free_rank = a.rows() - nonzero;
  report.checks.push_back(make_check("divisibility chain", is_divisibility_chain(r.s)));
  if (show_transforms) {
    const bool product_ok = *r.p * a * *r.q == IntMatrix::diagonal(a.rows(), a.cols(), r.s);
    report.checks.push_back(make_check("P*A*Q = diag(s)", product_ok));
    report.checks.push_back(make_check("P, Q unimodular",
                                       abs(determinant(*r.p)) == 1 && abs(determinant(*r.q)) == 1));
    report.p = std::move(r.p);
    report.q = std::move(r.q);
  }
  return report;
}

Report cmd_snf_file(const std::string& path, bool show_transforms) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return cmd_snf(read_matrix(in), show_transforms, path);
}

Report cmd_verify(Range m_range, Range n_range) {
  if (m_range.lo < 1 || n_range.lo < 1) throw UsageError("verify ranges must start at 1 or above");

  struct Cell {
    std::size_t m, n;
    std::vector<Check> checks;
  };
  std::vector<Cell> cells;
  for (std::size_t m = m_range.lo; m <= m_range.hi; ++m)
    for (std::size_t n = n_range.lo; n <= n_range.hi; ++n) cells.push_back({m, n, {}});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& cell = cells[i];
      try {
        verify_family(Family::kKmPn, cell.m, cell.n, cell.checks);
        verify_family(Family::kPmPn, cell.m, cell.n, cell.checks);
      } catch (const std::exception& e) {
        cell.checks.push_back(make_check("m=" + std::to_string(cell.m) + " n=" +
                                             std::to_string(cell.n) + " evaluation",
                                         false, e.what()));
      }
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, cells.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  Report report;
  report.subject = "verify m=" + std::to_string(m_range.lo) + ".." + std::to_string(m_range.hi) +
                   " n=" + std::to_string(n_range.lo) + ".." + std::to_string(n_range.hi);
  for (Cell& cell : cells) {
    std::move(cell.checks.begin(), cell.checks.end(), std::back_inserter(report.checks));
  }
  return report;
}

int exit_code(const Report& report) { return report.all_passed() ? 0 : 1; }

}  // namespace critgroup
