#include "expsearch/graph.hpp"

#include <algorithm>
#include <deque>

namespace expsearch {

Graph Graph::from_edges(std::size_t node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
  std::vector<std::size_t> degree(node_count, 0);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ArgumentError("edge endpoint out of range");
    }
    if (u == v) continue;
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (std::size_t v = 0; v < node_count; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  std::vector<NodeId> raw(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort and dedup each list, then compact.
  std::vector<std::size_t> offsets(node_count + 1, 0);
  std::size_t out = 0;
  for (std::size_t v = 0; v < node_count; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto end = std::unique(first, last);
    for (auto it = first; it != end; ++it) raw[out++] = *it;
    offsets[v + 1] = out;
  }
  raw.resize(out);
  raw.shrink_to_fit();
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(raw);
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::string validate(const Graph& g) {
  const std::size_t n = g.node_count();
  std::size_t total = 0;
  for (NodeId v = 0; v < n; ++v) {
    auto adj = g.neighbors(v);
    total += adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      NodeId w = adj[i];
      if (w >= n) return "neighbor id out of range at node " + std::to_string(v);
      if (w == v) return "self-loop at node " + std::to_string(v);
      if (i > 0 && adj[i - 1] >= w) {
        return "adjacency of node " + std::to_string(v) + " not strictly sorted";
      }
      if (!g.has_edge(w, v)) {
        return "asymmetric edge " + std::to_string(v) + "->" + std::to_string(w);
      }
    }
  }
  if (total % 2 != 0 || total / 2 != g.edge_count()) return "edge count mismatch";
  return {};
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  Components c;
  c.label.assign(n, kUnset);
  std::deque<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (c.label[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(c.sizes.size());
    std::size_t size = 0;
    c.label[s] = id;
    queue.push_back(s);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      ++size;
      for (NodeId w : g.neighbors(v)) {
        if (c.label[w] == kUnset) {
          c.label[w] = id;
          queue.push_back(w);
        }
      }
    }
    c.sizes.push_back(size);
    if (size > c.sizes[c.largest]) c.largest = id;
  }
  return c;
}

std::vector<NodeId> largest_component(const Graph& g) {
  std::vector<NodeId> out;
  if (g.node_count() == 0) return out;
  auto c = connected_components(g);
  out.reserve(c.sizes[c.largest]);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (c.label[v] == c.largest) out.push_back(v);
  }
  return out;
}

}  // namespace expsearch
