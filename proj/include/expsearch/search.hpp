#pragma once

#include <deque>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "expsearch/graph.hpp"
#include "expsearch/kernels.hpp"
#include "expsearch/rng.hpp"

namespace expsearch {

enum class Strategy { kXS, kDS, kRW, kBFS };

std::string_view strategy_name(Strategy s);
// Accepts "xs", "ds", "rw", "bfs" in any case.
Strategy parse_strategy(std::string_view name);
inline constexpr Strategy kAllStrategies[] = {Strategy::kXS, Strategy::kDS, Strategy::kRW, Strategy::kBFS};

// The current node has no neighbors at all.
class DeadEndError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// BFS has no holder left that can forward the query.
class ExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Progress of one query: the visited set S (in visit order), its coverage
// N(S) ∪ S, the current holder c for single-copy strategies, and the BFS
// frontier of active copies.
class SearchState {
 public:
  SearchState(const Graph& g, NodeId source, std::uint64_t seed);

  std::span<const NodeId> visited() const { return visited_order_; }
  bool is_visited(NodeId v) const { return visited_.test(v); }
  bool is_covered(NodeId v) const { return covered_.test(v); }
  const NodeFlags& covered_flags() const { return covered_; }
  std::size_t visited_count() const { return visited_order_.size(); }
  std::size_t covered_count() const { return covered_count_; }
  double coverage_fraction() const {
    return static_cast<double>(covered_count_) / static_cast<double>(covered_.size());
  }
  NodeId current() const { return current_; }
  std::size_t steps() const { return steps_; }
  Rng& rng() { return rng_; }

  struct Holder {
    NodeId node;
    std::size_t cursor;  // index of the next neighbor to consider
  };
  const std::deque<Holder>& frontier() const { return frontier_; }

  // Moves the single copy to v, counting one step.
  void hop(const Graph& g, NodeId v);
  // BFS: forward one copy from the frontier head; returns the recipient, or
  // nullopt after retiring a holder with nothing left to forward.
  std::optional<NodeId> forward_from_head(const Graph& g);

 private:
  void visit(const Graph& g, NodeId v);

  NodeFlags visited_;
  NodeFlags covered_;
  std::vector<NodeId> visited_order_;
  std::size_t covered_count_ = 0;
  NodeId current_;
  std::size_t steps_ = 0;
  std::deque<Holder> frontier_;
  Rng rng_;
};

// Single hop of each strategy; returns the node the query moved to.
NodeId step_xs(const Graph& g, SearchState& st);
NodeId step_ds(const Graph& g, SearchState& st);
NodeId step_rw(const Graph& g, SearchState& st);
NodeId step_bfs(const Graph& g, SearchState& st);
NodeId step(Strategy s, const Graph& g, SearchState& st);

struct StopCondition {
  double coverage = 1.0;                  // stop once |covered|/|V| >= coverage
  std::optional<std::size_t> max_steps;   // hop budget
  std::optional<NodeId> target;           // stop once target is covered
};

enum class Termination { kCoverageReached, kTargetFound, kStepBudget, kExhausted };
std::string_view termination_name(Termination t);

struct TraceRecord {
  std::size_t step = 0;
  NodeId node = 0;
  std::size_t visited = 0;
  std::size_t covered = 0;
  double coverage_fraction = 0.0;
};

struct SearchTrace {
  Strategy strategy = Strategy::kXS;
  NodeId source = 0;
  std::size_t node_count = 0;
  std::size_t initial_covered = 0;
  std::vector<TraceRecord> records;  // records[i].step == i + 1
  Termination termination = Termination::kExhausted;

  double initial_coverage() const {
    return static_cast<double>(initial_covered) / static_cast<double>(node_count);
  }
};

// Runs one query from `source` until the stop condition holds, the budget is
// spent, or coverage can no longer grow (the source component is covered).
SearchTrace run_search(const Graph& g, Strategy strategy, NodeId source, const StopCondition& stop,
                       std::uint64_t seed);

// Smallest step index with coverage >= fraction (0 when the source's own
// neighborhood suffices); nullopt if never reached.
std::optional<std::size_t> steps_to_coverage(const SearchTrace& trace, double fraction);

// CSV: step,node,visited,covered,coverage_fraction
void write_trace_csv(std::ostream& out, const SearchTrace& trace);

}  // namespace expsearch
