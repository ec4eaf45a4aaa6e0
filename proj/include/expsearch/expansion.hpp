#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "expsearch/graph.hpp"
#include "expsearch/kernels.hpp"

namespace expsearch {

// Exact non-negative ratio num/den, compared by cross-multiplication.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den == static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=> static_cast<unsigned __int128>(b.num) * a.den;
  }
};

// A sample S with its neighborhood N(S) and coverage N(S) ∪ S kept up to
// date as nodes are added.
class FrontierState {
 public:
  explicit FrontierState(const Graph& g);

  // Adds v to the sample; returns how many nodes became covered.
  std::size_t add(NodeId v);

  // |N({v}) − (N(S) ∪ S)|: neighbors of v not yet covered.
  std::size_t gain(NodeId v) const { return kernels::count_unflagged(graph_->neighbors(v), covered_); }

  bool in_sample(NodeId v) const { return in_sample_.test(v); }
  bool is_covered(NodeId v) const { return covered_.test(v); }
  bool in_neighborhood(NodeId v) const { return covered_.test(v) && !in_sample_.test(v); }

  std::size_t sample_size() const { return sample_.size(); }
  std::size_t covered_size() const { return covered_count_; }
  std::size_t neighborhood_size() const { return covered_count_ - sample_.size(); }
  std::span<const NodeId> sample() const { return sample_; }
  const NodeFlags& covered_flags() const { return covered_; }

  // Materialized N(S) in ascending order.
  std::vector<NodeId> neighborhood() const;

  // |N(S)| / |S| and |N(S)| / |V − S|. The sample must be nonempty.
  Ratio expansion() const;
  Ratio quality() const;

 private:
  const Graph* graph_;
  NodeFlags in_sample_;
  NodeFlags covered_;
  std::vector<NodeId> sample_;
  std::size_t covered_count_ = 0;
};

// |N(S)| / |S|. Duplicate ids are ignored; S must be a nonempty proper subset.
Ratio expansion(const Graph& g, std::span<const NodeId> sample);

// |N(S)| / |V − S|; equals 1 exactly when S dominates V.
Ratio expansion_quality(const Graph& g, std::span<const NodeId> sample);

enum class GreedyMode { kMaximize, kMinimize };

struct GreedyStep {
  std::size_t size = 0;
  NodeId node = 0;
  std::size_t covered = 0;
  Ratio expansion;
  Ratio quality;
};

struct GreedyResult {
  std::vector<NodeId> sample;
  // trajectory[i] describes the sample of size i + 1.
  std::vector<GreedyStep> trajectory;
};

struct GreedyOptions {
  // When set, ties are broken by a seeded random node ranking instead of
  // lowest node id.
  std::optional<std::uint64_t> tie_seed;
};

// Greedy expander-set construction. Each step adds the node outside S whose
// count of uncovered neighbors is largest (maximize) or smallest (minimize);
// the first pick is therefore the max- or min-degree node. Ties go to nodes
// that keep |N(S)| large (maximize: outside N(S); minimize: inside N(S)), then
// to the lowest id. Requires 1 <= k < |V|.
GreedyResult greedy_apx(const Graph& g, std::size_t k, GreedyMode mode, const GreedyOptions& options = {});

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  std::vector<NodeId> sample;
  Ratio expansion;
  std::size_t covered = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 2'000'000;

// Exhaustive maximum of |N(S)|/|S| over all k-subsets; the lexicographically
// smallest optimal sample is returned. Refuses when C(|V|, k) > budget.
BruteForceResult brute_force_max_expansion(const Graph& g, std::size_t k,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace expsearch
