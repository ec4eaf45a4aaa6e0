#include "expsearch/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "expsearch/csv.hpp"
#include "expsearch/expansion.hpp"
#include "expsearch/parallel.hpp"
#include "expsearch/rng.hpp"

namespace expsearch {

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
  return splitmix64(master_seed ^ splitmix64(0xA5A5A5A5ull + trial));
}

std::vector<NodeId> trial_sources(const Graph& g, const TrialConfig& cfg) {
  const auto lcc = largest_component(g);
  if (lcc.empty()) throw ArgumentError("graph has no nodes");
  std::vector<NodeId> sources(cfg.trials);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = make_rng(trial_seed(cfg.master_seed, t), 1);
    sources[t] = lcc[uniform_index(rng, lcc.size())];
  }
  return sources;
}

std::vector<CellResult> run_search_table(const Graph& g, const std::string& network,
                                         const std::vector<Strategy>& strategies,
                                         const std::vector<double>& targets, const TrialConfig& cfg) {
  if (cfg.trials < 1) throw ArgumentError("trials must be >= 1");
  if (targets.empty() || strategies.empty()) throw ArgumentError("need at least one strategy and target");
  const double top = *std::max_element(targets.begin(), targets.end());
  const auto sources = trial_sources(g, cfg);

  // steps[trial][strategy][target]
  using PerTarget = std::vector<std::optional<std::size_t>>;
  std::vector<std::vector<PerTarget>> steps(cfg.trials, std::vector<PerTarget>(strategies.size()));
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    StopCondition stop;
    stop.coverage = top;
    stop.max_steps = cfg.step_budget_factor * g.node_count();
    for (std::size_t s = 0; s < strategies.size(); ++s) {
      const auto trace = run_search(g, strategies[s], sources[t], stop, trial_seed(cfg.master_seed, t));
      for (double target : targets) steps[t][s].push_back(steps_to_coverage(trace, target));
    }
  });

  std::vector<CellResult> rows;
  for (std::size_t s = 0; s < strategies.size(); ++s) {
    for (std::size_t j = 0; j < targets.size(); ++j) {
      CellResult cell;
      cell.network = network;
      cell.strategy = strategies[s];
      cell.target = targets[j];
      cell.trials = cfg.trials;
      std::vector<double> xs;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        if (const auto v = steps[t][s][j]) {
          xs.push_back(static_cast<double>(*v));
        } else {
          ++cell.unreached;
        }
      }
      if (!xs.empty()) {
        double sum = 0.0;
        for (double x : xs) sum += x;
        const double mean = sum / static_cast<double>(xs.size());
        cell.mean_steps = mean;
        if (xs.size() > 1) {
          double ss = 0.0;
          for (double x : xs) ss += (x - mean) * (x - mean);
          const double sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
          cell.stderr_steps = sd / std::sqrt(static_cast<double>(xs.size()));
        }
      }
      rows.push_back(cell);
    }
  }
  return rows;
}

void write_report_header(std::ostream& out) {
  out << "network,strategy,target,mean_steps,stderr,trials,unreached_count\n";
}

void write_report_rows(std::ostream& out, const std::vector<CellResult>& rows) {
  for (const auto& r : rows) {
    out << r.network << ',' << strategy_name(r.strategy) << ',' << fmt6(r.target) << ','
        << (r.mean_steps ? fmt6(*r.mean_steps) : std::string{}) << ',' << fmt6(r.stderr_steps) << ','
        << r.trials << ',' << r.unreached << '\n';
  }
}

std::vector<CoverageComparison> greedy_vs_xs(const Graph& g, std::size_t steps, const TrialConfig& cfg) {
  const std::size_t n = g.node_count();
  if (steps < 1) throw ArgumentError("greedy_vs_xs: steps must be >= 1");
  if (n < 2) throw ArgumentError("greedy_vs_xs: graph needs at least two nodes");

  const auto greedy = greedy_apx(g, std::min(steps, n - 1), GreedyMode::kMaximize);
  const auto sources = trial_sources(g, cfg);

  std::vector<std::vector<double>> curves(cfg.trials, std::vector<double>(steps, 0.0));
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    StopCondition stop;
    stop.max_steps = steps;
    const auto trace = run_search(g, Strategy::kXS, sources[t], stop, trial_seed(cfg.master_seed, t));
    double last = trace.initial_coverage();
    for (std::size_t i = 0; i < steps; ++i) {
      if (i < trace.records.size()) last = trace.records[i].coverage_fraction;
      curves[t][i] = last;
    }
  });

  std::vector<CoverageComparison> rows(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const auto& gs = greedy.trajectory[std::min(i, greedy.trajectory.size() - 1)];
    rows[i].step = i + 1;
    rows[i].greedy = static_cast<double>(gs.covered) / static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) sum += curves[t][i];
    rows[i].xs_mean = sum / static_cast<double>(cfg.trials);
  }
  return rows;
}

void write_comparison_csv(std::ostream& out, const std::vector<CoverageComparison>& rows) {
  out << "step,greedy_coverage,xs_mean_coverage\n";
  for (const auto& r : rows) out << r.step << ',' << fmt6(r.greedy) << ',' << fmt6(r.xs_mean) << '\n';
}

}  // namespace expsearch
