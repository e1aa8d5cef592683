#pragma once

#include <iosfwd>
#include <string>

#include "critgroup/graph.hpp"
#include "critgroup/int_matrix.hpp"

namespace critgroup {

/// Edge-list text: first line `n`, then `u v [mult]` per line. `#` starts a
/// comment; blank lines are skipped; repeated pairs accumulate.
/// Throws ParseError with the offending line number.
Multigraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Multigraph& g);

/// Matrix text: first line `rows cols`, then `rows` lines of `cols` decimal
/// integers. Throws ParseError with the offending line number.
IntMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& a);

}  // namespace critgroup
