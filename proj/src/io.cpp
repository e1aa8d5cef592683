#include "critgroup/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "critgroup/errors.hpp"

namespace critgroup {

namespace {

// Reads lines, dropping `#` comments and blank lines; tracks line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ss(line);
      for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

std::size_t parse_count(const std::string& tok, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                               tok + "'");
  }
  return value;
}

}  // namespace

Multigraph read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(reader.line() + 1, "missing vertex count");
  if (tok.size() != 1) throw ParseError(reader.line(), "header must be a single vertex count");
  const std::size_t n = parse_count(tok[0], reader.line(), "vertex count");

  std::vector<Edge> edges;
  while (reader.next(tok)) {
    const std::size_t line = reader.line();
    if (tok.size() < 2 || tok.size() > 3) throw ParseError(line, "expected 'u v [mult]'");
    Edge e;
    e.u = parse_count(tok[0], line, "u");
    e.v = parse_count(tok[1], line, "v");
    std::size_t mult = tok.size() == 3 ? parse_count(tok[2], line, "mult") : 1;
    if (e.u >= n || e.v >= n) throw ParseError(line, "vertex out of range");
    if (e.u == e.v) throw ParseError(line, "self-loops are not allowed");
    if (mult == 0 || mult > 1'000'000) throw ParseError(line, "multiplicity must be in 1..1000000");
    e.mult = static_cast<unsigned>(mult);
    edges.push_back(e);
  }
  return Multigraph(n, edges);
}

void write_edge_list(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.mult != 1) out << ' ' << e.mult;
    out << '\n';
  }
}

IntMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok)) throw ParseError(reader.line() + 1, "missing 'rows cols' header");
  if (tok.size() != 2) throw ParseError(reader.line(), "header must be 'rows cols'");
  const std::size_t rows = parse_count(tok[0], reader.line(), "rows");
  const std::size_t cols = parse_count(tok[1], reader.line(), "cols");

  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!reader.next(tok)) {
      throw ParseError(reader.line() + 1, "expected " + std::to_string(rows) + " rows, got " +
                                              std::to_string(i));
    }
    if (tok.size() != cols) {
      throw ParseError(reader.line(), "expected " + std::to_string(cols) + " entries, got " +
                                          std::to_string(tok.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      try {
        a(i, j) = parse_bigint(tok[j]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(reader.line(), e.what());
      }
    }
  }
  if (reader.next(tok)) throw ParseError(reader.line(), "unexpected trailing data");
  return a;
}

void write_matrix(std::ostream& out, const IntMatrix& a) {
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j);
    out << '\n';
  }
}

}  // namespace critgroup
