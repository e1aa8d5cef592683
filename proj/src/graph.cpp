#include "critgroup/graph.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace critgroup {

namespace {

std::pair<std::size_t, std::size_t> key(std::size_t u, std::size_t v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

}  // namespace

Multigraph::Multigraph(std::size_t n, const std::vector<Edge>& edges) : n_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("Multigraph: edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "} out of range for " +
                                  std::to_string(n) + " vertices");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("Multigraph: self-loop at vertex " + std::to_string(e.u));
    }
    if (e.mult == 0) continue;
    pairs_[key(e.u, e.v)] += e.mult;
  }
}

unsigned Multigraph::multiplicity(std::size_t u, std::size_t v) const {
  if (u == v) return 0;
  auto it = pairs_.find(key(u, v));
  return it == pairs_.end() ? 0 : it->second;
}

unsigned Multigraph::degree(std::size_t u) const {
  unsigned d = 0;
  for (const auto& [uv, mult] : pairs_) {
    if (uv.first == u || uv.second == u) d += mult;
  }
  return d;
}

std::size_t Multigraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& [uv, mult] : pairs_) total += mult;
  return total;
}

std::vector<Edge> Multigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(pairs_.size());
  for (const auto& [uv, mult] : pairs_) out.push_back({uv.first, uv.second, mult});
  return out;
}

bool Multigraph::is_simple() const noexcept {
  for (const auto& [uv, mult] : pairs_) {
    if (mult != 1) return false;
  }
  return true;
}

Multigraph path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path: need at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
  return Multigraph(n, edges);
}

Multigraph complete(std::size_t m) {
  if (m == 0) throw std::invalid_argument("complete: need at least one vertex");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) edges.push_back({i, j, 1});
  return Multigraph(m, edges);
}

Multigraph complement(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.multiplicity(i, j) == 0) edges.push_back({i, j, 1});
  return Multigraph(n, edges);
}

Multigraph disjoint_union(const Multigraph& g1, const Multigraph& g2) {
  const std::size_t shift = g1.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.push_back({e.u + shift, e.v + shift, e.mult});
  return Multigraph(shift + g2.vertex_count(), edges);
}

Multigraph join(const Multigraph& g1, const Multigraph& g2) {
  const std::size_t shift = g1.vertex_count();
  std::vector<Edge> edges = disjoint_union(g1, g2).edges();
  for (std::size_t u = 0; u < shift; ++u)
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) edges.push_back({u, shift + v, 1});
  return Multigraph(shift + g2.vertex_count(), edges);
}

IntMatrix laplacian(const Multigraph& g) {
  IntMatrix lap(g.vertex_count(), g.vertex_count());
  for (const auto& [uv, mult] : g.pairs()) {
    const auto [u, v] = uv;
    lap(u, v) -= mult;
    lap(v, u) -= mult;
    lap(u, u) += mult;
    lap(v, v) += mult;
  }
  return lap;
}

std::size_t connected_components(const Multigraph& g) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count();
  for (const auto& [uv, mult] : g.pairs()) {
    auto a = find(uv.first), b = find(uv.second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace critgroup
