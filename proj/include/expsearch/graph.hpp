#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace expsearch {

using NodeId = std::uint32_t;

// Raised for precondition violations on public operations.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable undirected simple graph in compressed adjacency form.
// Neighbor lists are sorted, duplicate-free and symmetric.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary edge list over ids [0, node_count). Self-loops
  // and duplicates are dropped; every edge is stored in both directions.
  static Graph from_edges(std::size_t node_count,
                          std::span<const std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

// Checks the structural invariants (symmetry, no self-loops, sorted unique
// lists, dense ids). Returns an empty string when valid, else a description
// of the first violation found.
std::string validate(const Graph& g);

// Component label per node plus the label of the largest component.
struct Components {
  std::vector<std::uint32_t> label;
  std::vector<std::size_t> sizes;
  std::uint32_t largest = 0;
};
Components connected_components(const Graph& g);

// Node ids of the largest connected component in ascending order.
std::vector<NodeId> largest_component(const Graph& g);

}  // namespace expsearch
