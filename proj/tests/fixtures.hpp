#pragma once

// Small named graphs and from-definition oracles shared by the test suites.
// The oracles work on plain edge queries and std::set arithmetic so they stay
// independent of the incremental code they check.

#include <limits>
#include <set>
#include <utility>
#include <vector>

#include "expsearch/generators.hpp"
#include "expsearch/graph.hpp"

namespace fixtures {

using expsearch::Graph;
using expsearch::NodeId;
using EdgeVec = std::vector<std::pair<NodeId, NodeId>>;

inline Graph make(std::size_t n, EdgeVec edges) { return Graph::from_edges(n, edges); }

inline Graph path(std::size_t n) {
  EdgeVec e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make(n, e);
}

inline Graph cycle(std::size_t n) {
  EdgeVec e;
  for (NodeId v = 0; v < n; ++v) e.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return make(n, e);
}

// Center 0, leaves 1..leaves.
inline Graph star(std::size_t leaves) {
  EdgeVec e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return make(leaves + 1, e);
}

inline Graph complete(std::size_t n) { return expsearch::generate_er(n, 1.0, 0); }

// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangles() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

// Two copies of K_m (ids [0,m) and [m,2m)) joined by the edge (m-1, m).
inline Graph two_cliques(std::size_t m) {
  EdgeVec e;
  for (NodeId base : {NodeId{0}, static_cast<NodeId>(m)}) {
    for (NodeId u = 0; u < m; ++u)
      for (NodeId v = u + 1; v < m; ++v) e.emplace_back(base + u, base + v);
  }
  e.emplace_back(static_cast<NodeId>(m - 1), static_cast<NodeId>(m));
  return make(2 * m, e);
}

inline std::set<NodeId> naive_neighborhood(const Graph& g, const std::set<NodeId>& s) {
  std::set<NodeId> out;
  for (NodeId w = 0; w < g.node_count(); ++w) {
    if (s.count(w)) continue;
    for (NodeId v : s) {
      if (g.has_edge(v, w)) {
        out.insert(w);
        break;
      }
    }
  }
  return out;
}

inline std::size_t naive_coverage(const Graph& g, const std::set<NodeId>& s) {
  return naive_neighborhood(g, s).size() + s.size();
}

// All-pairs hop distances (Floyd-Warshall); max() for unreachable.
inline std::vector<std::vector<std::size_t>> all_pairs(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (NodeId u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (NodeId v = 0; v < n; ++v)
      if (g.has_edge(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

}  // namespace fixtures
