// Command-line harness: network statistics, expansion signatures, search
// tables, greedy-vs-XS curves, dataset fetching and single search traces.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "expsearch/csv.hpp"
#include "expsearch/datasets.hpp"
#include "expsearch/experiment.hpp"
#include "expsearch/kernels.hpp"
#include "expsearch/network_source.hpp"
#include "expsearch/signature.hpp"
#include "expsearch/stats.hpp"

namespace {

using namespace expsearch;
using nlohmann::json;

struct Common {
  std::vector<std::string> networks;
  std::vector<std::string> generators;
  std::uint64_t seed = 42;
  std::size_t trials = 30;
  std::size_t threads = 0;
  std::string out = "-";
  std::string cache_dir;
};

void add_common(CLI::App* cmd, Common& c, bool with_trials) {
  cmd->add_option("--network", c.networks, "Registry dataset name or file:<path> (repeatable)");
  cmd->add_option("--generator", c.generators, "Inline generator, e.g. er:n=10000,p=0.0005 (repeatable)");
  cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  if (with_trials) {
    cmd->add_option("--trials", c.trials, "Trials per network")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)")->capture_default_str();
  }
  cmd->add_option("--out", c.out, "Output CSV path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--cache-dir", c.cache_dir, "Dataset cache (default $EXPSEARCH_CACHE_DIR)");
}

std::vector<std::string> sources_of(const Common& c) {
  std::vector<std::string> all = c.networks;
  all.insert(all.end(), c.generators.begin(), c.generators.end());
  if (all.empty()) throw CLI::ValidationError("--network/--generator", "at least one network is required");
  return all;
}

// Output sink: a file, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  // Human-readable notes go to stdout only when the CSV does not.
  std::ostream& notes() { return file_ ? std::cout : std::cerr; }

  void write_sidecar(const json& meta) {
    if (!file_) return;
    std::ofstream side(path_ + ".json");
    side << meta.dump(2) << '\n';
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
};

json base_metadata(const std::string& command, const Common& c) {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return json{{"command", command},
              {"version", EXPSEARCH_VERSION},
              {"timestamp", stamp},
              {"seed", c.seed},
              {"networks", sources_of(c)},
              {"kernel_isa", std::string(kernels::isa_name(kernels::dispatch()))}};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw CLI::ValidationError("list", "bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

struct Failure {
  std::string network;
  std::string reason;
};

int finish(const std::vector<Failure>& failures, json& meta, Output& out) {
  json list = json::array();
  for (const auto& f : failures) {
    list.push_back({{"network", f.network}, {"error", f.reason}});
    std::cerr << "failed: " << f.network << ": " << f.reason << '\n';
  }
  meta["failures"] = list;
  out.write_sidecar(meta);
  return failures.empty() ? 0 : 1;
}

int cmd_stats(const Common& c, std::size_t path_samples) {
  Output out(c.out);
  const auto cache = resolve_cache_dir(c.cache_dir);
  auto meta = base_metadata("stats", c);
  meta["path_length_sample"] = path_samples;
  std::vector<Failure> failures;
  out.stream() << "network,n,edges,density,avg_degree,clustering_coefficient,characteristic_path_length\n";
  for (const auto& src : sources_of(c)) {
    try {
      const auto net = resolve_network(src, c.seed, cache);
      const auto s = compute_stats(net.graph, path_samples, c.seed);
      out.stream() << net.label << ',' << s.n << ',' << s.edges << ',' << fmt6(s.density) << ','
                   << fmt6(s.avg_degree) << ',' << fmt6(s.clustering_coefficient) << ','
                   << fmt6(s.characteristic_path_length) << '\n';
    } catch (const std::exception& e) {
      failures.push_back({src, e.what()});
    }
  }
  return finish(failures, meta, out);
}

int cmd_signature(const Common& c, const std::string& fractions_text) {
  const auto sources = sources_of(c);
  if (sources.size() != 1) throw CLI::ValidationError("signature", "exactly one network is required");
  Output out(c.out);
  auto meta = base_metadata("signature", c);
  const auto fractions = fractions_text.empty() ? default_fractions() : parse_list(fractions_text);
  std::vector<Failure> failures;
  try {
    const auto net = resolve_network(sources.front(), c.seed, resolve_cache_dir(c.cache_dir));
    const auto sig = build_signature(net.graph, fractions, net.label);
    write_signature_csv(out.stream(), sig);
    if (const auto t = dominating_threshold(sig)) {
      out.notes() << net.label << ": max_quality reaches 1 at fraction " << fmt6(t->fraction) << " (k=" << t->k
                  << ")\n";
      meta["dominating_fraction"] = t->fraction;
      meta["dominating_k"] = t->k;
    } else {
      out.notes() << net.label << ": max_quality stays below 1 on this grid\n";
      meta["dominating_fraction"] = nullptr;
    }
  } catch (const std::exception& e) {
    failures.push_back({sources.front(), e.what()});
  }
  return finish(failures, meta, out);
}

int cmd_search_table(const Common& c, const std::string& strategies_text, const std::string& targets_text,
                     std::size_t budget_factor) {
  std::vector<Strategy> strategies;
  {
    std::stringstream ss(strategies_text);
    std::string item;
    while (std::getline(ss, item, ',')) strategies.push_back(parse_strategy(item));
  }
  const auto targets = parse_list(targets_text);
  TrialConfig cfg;
  cfg.trials = c.trials;
  cfg.master_seed = c.seed;
  cfg.threads = c.threads;
  cfg.step_budget_factor = budget_factor;

  Output out(c.out);
  auto meta = base_metadata("search-table", c);
  meta["trials"] = c.trials;
  meta["targets"] = targets;
  meta["step_budget_factor"] = budget_factor;
  std::vector<Failure> failures;
  write_report_header(out.stream());
  for (const auto& src : sources_of(c)) {
    try {
      const auto net = resolve_network(src, c.seed, resolve_cache_dir(c.cache_dir));
      write_report_rows(out.stream(), run_search_table(net.graph, net.label, strategies, targets, cfg));
    } catch (const std::exception& e) {
      failures.push_back({src, e.what()});
    }
  }
  return finish(failures, meta, out);
}

int cmd_greedy_vs_xs(const Common& c, std::size_t steps) {
  const auto sources = sources_of(c);
  if (sources.size() != 1) throw CLI::ValidationError("greedy-vs-xs", "exactly one network is required");
  TrialConfig cfg;
  cfg.trials = c.trials;
  cfg.master_seed = c.seed;
  cfg.threads = c.threads;
  Output out(c.out);
  auto meta = base_metadata("greedy-vs-xs", c);
  meta["trials"] = c.trials;
  meta["steps"] = steps;
  std::vector<Failure> failures;
  try {
    const auto net = resolve_network(sources.front(), c.seed, resolve_cache_dir(c.cache_dir));
    write_comparison_csv(out.stream(), greedy_vs_xs(net.graph, steps, cfg));
  } catch (const std::exception& e) {
    failures.push_back({sources.front(), e.what()});
  }
  return finish(failures, meta, out);
}

int cmd_fetch(const Common& c) {
  const auto cache = resolve_cache_dir(c.cache_dir);
  std::vector<std::string> names = c.networks;
  if (names.empty()) {
    for (const auto& d : dataset_registry()) {
      if (!d.optional) names.push_back(d.name);
    }
  }
  Output out(c.out);
  auto meta = base_metadata("fetch", c);
  std::vector<Failure> failures;
  out.stream() << "network,path,n,edges\n";
  for (const auto& name : names) {
    try {
      const auto* spec = find_dataset(name);
      if (!spec) throw ArgumentError("not a registry dataset");
      const auto path = fetch_dataset(*spec, cache);
      const auto g = load_dataset_file(*spec, path);
      out.stream() << name << ',' << path.string() << ',' << g.node_count() << ',' << g.edge_count() << '\n';
    } catch (const std::exception& e) {
      failures.push_back({name, e.what()});
    }
  }
  return finish(failures, meta, out);
}

int cmd_trace(const Common& c, const std::string& strategy, std::optional<NodeId> source, double coverage,
              std::optional<std::size_t> max_steps, std::optional<NodeId> target) {
  const auto sources = sources_of(c);
  if (sources.size() != 1) throw CLI::ValidationError("trace", "exactly one network is required");
  Output out(c.out);
  auto meta = base_metadata("trace", c);
  std::vector<Failure> failures;
  try {
    const auto net = resolve_network(sources.front(), c.seed, resolve_cache_dir(c.cache_dir));
    TrialConfig cfg;
    cfg.trials = 1;
    cfg.master_seed = c.seed;
    const NodeId src = source ? *source : trial_sources(net.graph, cfg).front();
    StopCondition stop{coverage, max_steps, target};
    const auto trace = run_search(net.graph, parse_strategy(strategy), src, stop, trial_seed(c.seed, 0));
    write_trace_csv(out.stream(), trace);
    meta["source"] = src;
    meta["strategy"] = strategy;
    meta["termination"] = std::string(termination_name(trace.termination));
    out.notes() << net.label << ": " << trace.records.size() << " steps, " << termination_name(trace.termination)
                << '\n';
  } catch (const std::exception& e) {
    failures.push_back({sources.front(), e.what()});
  }
  return finish(failures, meta, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansion signatures and decentralized search experiments"};
  app.require_subcommand(1);

  Common common;
  std::size_t path_samples = 200;
  auto* stats = app.add_subcommand("stats", "Table of network properties");
  add_common(stats, common, false);
  stats->add_option("--path-samples", path_samples, "BFS sources for path length")->capture_default_str();

  std::string fractions;
  auto* signature = app.add_subcommand("signature", "Greedy max/min expansion signature");
  add_common(signature, common, false);
  signature->add_option("--fractions", fractions, "Comma-separated sample fractions (default 0.01..0.50)");

  std::string strategies = "xs,ds,rw,bfs";
  std::string targets = "0.20,0.35,0.50";
  std::size_t budget_factor = 50;
  auto* table = app.add_subcommand("search-table", "Steps to reach coverage targets per strategy");
  add_common(table, common, true);
  table->add_option("--strategies", strategies, "Comma-separated strategies")->capture_default_str();
  table->add_option("--targets", targets, "Comma-separated coverage targets")->capture_default_str();
  table->add_option("--step-budget", budget_factor, "Hop budget per run, in multiples of |V|")->capture_default_str();

  std::size_t steps = 1000;
  auto* gvx = app.add_subcommand("greedy-vs-xs", "Greedy coverage against mean XS coverage per step");
  add_common(gvx, common, true);
  gvx->add_option("--steps", steps, "Number of steps")->capture_default_str();

  auto* fetch = app.add_subcommand("fetch", "Download registry datasets into the cache");
  add_common(fetch, common, false);

  std::string trace_strategy = "xs";
  std::optional<NodeId> trace_source;
  double trace_coverage = 1.0;
  std::optional<std::size_t> trace_steps;
  std::optional<NodeId> trace_target;
  auto* trace = app.add_subcommand("trace", "Per-step trace of a single search");
  add_common(trace, common, false);
  trace->add_option("--strategy", trace_strategy, "xs, ds, rw or bfs")->capture_default_str();
  trace->add_option("--source", trace_source, "Source node (default: seeded draw from the largest component)");
  trace->add_option("--coverage", trace_coverage, "Stop at this coverage fraction")->capture_default_str();
  trace->add_option("--max-steps", trace_steps, "Hop budget");
  trace->add_option("--target", trace_target, "Stop once this node is covered");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats) return cmd_stats(common, path_samples);
    if (*signature) return cmd_signature(common, fractions);
    if (*table) return cmd_search_table(common, strategies, targets, budget_factor);
    if (*gvx) return cmd_greedy_vs_xs(common, steps);
    if (*fetch) return cmd_fetch(common);
    if (*trace) return cmd_trace(common, trace_strategy, trace_source, trace_coverage, trace_steps, trace_target);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
