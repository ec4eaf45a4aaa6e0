#include "expsearch/generators.hpp"

#include <algorithm>
#include <cmath>

#include "expsearch/rng.hpp"

namespace expsearch {

Graph generate_er(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("generate_er: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("generate_er: p must lie in [0, 1]");

  std::vector<std::pair<NodeId, NodeId>> edges;
  if (p == 0.0 || n < 2) return Graph::from_edges(n, edges);
  if (p == 1.0) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
  }

  // Geometric skipping over the pairs (v, w), w < v, in row-major order.
  Rng rng = make_rng(seed);
  const double log_q = std::log1p(-p);
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.1) + 16);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = uniform_unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<NodeId>(w), static_cast<NodeId>(v));
  }
  return Graph::from_edges(n, edges);
}

Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1) throw ArgumentError("generate_ba: m must be >= 1");
  if (n <= m) throw ArgumentError("generate_ba: n must exceed m");

  std::vector<std::pair<NodeId, NodeId>> edges;
  // Every edge endpoint appears once here, so a uniform draw is a
  // degree-proportional draw over nodes.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * (m * (m + 1) / 2 + (n - m - 1) * m));
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }

  Rng rng = make_rng(seed);
  std::vector<NodeId> targets;
  targets.reserve(m);
  for (auto v = static_cast<NodeId>(m + 1); v < n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      NodeId t = endpoints[uniform_index(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace expsearch
