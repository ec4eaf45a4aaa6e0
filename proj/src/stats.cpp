#include "expsearch/stats.hpp"

#include <algorithm>
#include <numeric>

#include "expsearch/rng.hpp"

namespace expsearch {

std::vector<double> local_clustering(const Graph& g) {
  const std::size_t n = g.node_count();
  // Orient each edge toward the higher (degree, id) endpoint and count each
  // triangle once from its lowest-ranked corner.
  auto ranks_before = [&](NodeId a, NodeId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<std::vector<NodeId>> forward(n);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : g.neighbors(v)) {
      if (ranks_before(v, w)) forward[v].push_back(w);
    }
  }

  std::vector<std::uint64_t> triangles(n, 0);
  std::vector<NodeId> mark(n, static_cast<NodeId>(-1));
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : forward[v]) mark[w] = v;
    for (NodeId w : forward[v]) {
      for (NodeId x : forward[w]) {
        if (mark[x] == v) {
          ++triangles[v];
          ++triangles[w];
          ++triangles[x];
        }
      }
    }
  }

  std::vector<double> cc(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    const double d = static_cast<double>(g.degree(v));
    if (d >= 2) cc[v] = 2.0 * static_cast<double>(triangles[v]) / (d * (d - 1));
  }
  return cc;
}

namespace {

// Sum and count of finite distances from `source`.
std::pair<std::uint64_t, std::uint64_t> bfs_distance_sum(const Graph& g, NodeId source,
                                                         std::vector<std::uint32_t>& dist,
                                                         std::vector<NodeId>& queue) {
  constexpr auto kInf = static_cast<std::uint32_t>(-1);
  std::fill(dist.begin(), dist.end(), kInf);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  std::uint64_t sum = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId v = queue[head];
    sum += dist[v];
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] == kInf) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return {sum, queue.size() - 1};
}

}  // namespace

GraphStats compute_stats(const Graph& g, std::size_t path_length_sample, std::uint64_t seed) {
  if (g.node_count() == 0) throw ArgumentError("compute_stats: empty graph");
  if (path_length_sample < 1) throw ArgumentError("compute_stats: path_length_sample must be >= 1");

  GraphStats s;
  s.n = g.node_count();
  s.edges = g.edge_count();
  const double n = static_cast<double>(s.n);
  s.density = s.n > 1 ? 2.0 * static_cast<double>(s.edges) / (n * (n - 1)) : 0.0;
  s.avg_degree = 2.0 * static_cast<double>(s.edges) / n;

  auto cc = local_clustering(g);
  s.clustering_coefficient = std::accumulate(cc.begin(), cc.end(), 0.0) / n;

  auto lcc = largest_component(g);
  if (lcc.size() > 1) {
    std::vector<NodeId> sources = lcc;
    if (path_length_sample < lcc.size()) {
      // Partial Fisher-Yates; sources then sorted so the reduction order is fixed.
      Rng rng = make_rng(seed);
      for (std::size_t i = 0; i < path_length_sample; ++i) {
        std::swap(sources[i], sources[i + uniform_index(rng, sources.size() - i)]);
      }
      sources.resize(path_length_sample);
      std::sort(sources.begin(), sources.end());
    }
    std::vector<std::uint32_t> dist(s.n);
    std::vector<NodeId> queue;
    queue.reserve(s.n);
    std::uint64_t total = 0;
    std::uint64_t pairs = 0;
    for (NodeId src : sources) {
      auto [sum, count] = bfs_distance_sum(g, src, dist, queue);
      total += sum;
      pairs += count;
    }
    s.characteristic_path_length = static_cast<double>(total) / static_cast<double>(pairs);
  }
  return s;
}

}  // namespace expsearch
