#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "critgroup/graph.hpp"
#include "critgroup/join_families.hpp"
#include "critgroup/report.hpp"

namespace critgroup {

// Bad command-line parameters; the CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Engine { kClosedForm, kSnf, kBoth };

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// "A..B" (inclusive) or a single "A". Throws UsageError.
Range parse_range(std::string_view text);
Engine parse_engine(std::string_view text);
Family parse_family(std::string_view text);

Report cmd_family(Family family, std::size_t m, std::size_t n, Engine engine);
Report cmd_graph(const Multigraph& g, std::string subject);
Report cmd_graph_file(const std::string& path);
Report cmd_snf(const IntMatrix& a, bool show_transforms, std::string subject);
Report cmd_snf_file(const std::string& path, bool show_transforms);

/// Per (m, n) cell: closed form vs SNF for both families, order law, tree
/// oracle (when within its guard), block-reduction equivalence and the
/// eigenvalue-product identities. Cells run concurrently; output is sorted.
Report cmd_verify(Range m_range, Range n_range);

/// 0 when every check passed or was skipped, 1 otherwise.
int exit_code(const Report& report);

}  // namespace critgroup
