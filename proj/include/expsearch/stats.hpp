#pragma once

#include <cstdint>

#include "expsearch/graph.hpp"

namespace expsearch {

struct GraphStats {
  std::size_t n = 0;
  std::size_t edges = 0;
  double density = 0.0;
  double avg_degree = 0.0;
  // Mean local clustering; nodes of degree < 2 count as 0.
  double clustering_coefficient = 0.0;
  // Mean BFS distance from sampled sources in the largest component.
  double characteristic_path_length = 0.0;
};

// Density, average degree and clustering are exact. Path length uses
// `path_length_sample` BFS sources drawn without replacement from the largest
// component (all of it when the sample is at least its size).
GraphStats compute_stats(const Graph& g, std::size_t path_length_sample, std::uint64_t seed);

// Per-node local clustering coefficient (0 for degree < 2).
std::vector<double> local_clustering(const Graph& g);

}  // namespace expsearch
