#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "expsearch/expansion.hpp"

namespace expsearch {

struct SignaturePoint {
  std::size_t k = 0;
  double fraction = 0.0;  // k / |V|
  Ratio max_expansion;
  Ratio max_quality;
  Ratio min_expansion;
  Ratio min_quality;
};

struct ExpansionSignature {
  std::string graph_id;
  std::size_t node_count = 0;
  std::vector<SignaturePoint> points;
};

// 0.01, 0.02, ..., 0.50.
std::vector<double> default_fractions();

// Sample size for a fraction: ceil(fraction · n), clamped to [1, n − 1].
std::size_t sample_size_for(double fraction, std::size_t n);

// One greedy-max and one greedy-min pass up to the largest requested size;
// points are read off both trajectories. Fractions mapping to an already
// emitted k are skipped.
ExpansionSignature build_signature(const Graph& g, const std::vector<double>& fractions,
                                   std::string graph_id = {});

// First point whose max quality is exactly 1.
std::optional<SignaturePoint> dominating_threshold(const ExpansionSignature& sig);

// CSV: k,fraction,max_expansion,max_quality,min_expansion,min_quality
void write_signature_csv(std::ostream& out, const ExpansionSignature& sig);

}  // namespace expsearch
