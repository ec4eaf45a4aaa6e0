#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "expsearch/graph.hpp"
#include "expsearch/search.hpp"

namespace expsearch {

struct TrialConfig {
  std::size_t trials = 30;
  std::uint64_t master_seed = 42;
  std::size_t threads = 0;  // 0 = hardware concurrency
  // Hop budget per run as a multiple of |V|.
  std::size_t step_budget_factor = 50;
};

// Per-trial seed derived from (master seed, trial index).
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

// Trial sources, uniform over the largest connected component. Shared across
// strategies so comparisons are paired.
std::vector<NodeId> trial_sources(const Graph& g, const TrialConfig& cfg);

struct CellResult {
  std::string network;
  Strategy strategy = Strategy::kXS;
  double target = 0.0;
  std::optional<double> mean_steps;  // over trials that reached the target
  double stderr_steps = 0.0;
  std::size_t trials = 0;
  std::size_t unreached = 0;
};

// Every (strategy, target) cell for one network. Each trial runs once per
// strategy up to the largest target and reads all targets off that trace.
std::vector<CellResult> run_search_table(const Graph& g, const std::string& network,
                                         const std::vector<Strategy>& strategies,
                                         const std::vector<double>& targets, const TrialConfig& cfg);

// CSV: network,strategy,target,mean_steps,stderr,trials,unreached_count
void write_report_header(std::ostream& out);
void write_report_rows(std::ostream& out, const std::vector<CellResult>& rows);

struct CoverageComparison {
  std::size_t step = 0;
  double greedy = 0.0;   // |N(S) ∪ S| / |V| after `step` greedy selections
  double xs_mean = 0.0;  // mean XS coverage after `step` hops
};

// Greedy-max trajectory against the trial-mean XS coverage curve for
// i = 1..steps. Runs that stop early carry their final coverage forward.
std::vector<CoverageComparison> greedy_vs_xs(const Graph& g, std::size_t steps, const TrialConfig& cfg);

// CSV: step,greedy_coverage,xs_mean_coverage
void write_comparison_csv(std::ostream& out, const std::vector<CoverageComparison>& rows);

}  // namespace expsearch
