#include "expsearch/search.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <string>

#include "expsearch/csv.hpp"

namespace expsearch {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kXS: return "XS";
    case Strategy::kDS: return "DS";
    case Strategy::kRW: return "RW";
    case Strategy::kBFS: return "BFS";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "xs") return Strategy::kXS;
  if (lower == "ds") return Strategy::kDS;
  if (lower == "rw") return Strategy::kRW;
  if (lower == "bfs") return Strategy::kBFS;
  throw ArgumentError("unknown strategy '" + std::string(name) + "'");
}

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::kCoverageReached: return "coverage-reached";
    case Termination::kTargetFound: return "target-found";
    case Termination::kStepBudget: return "step-budget";
    case Termination::kExhausted: return "exhausted";
  }
  return "?";
}

SearchState::SearchState(const Graph& g, NodeId source, std::uint64_t seed)
    : visited_(g.node_count()), covered_(g.node_count()), current_(source), rng_(make_rng(seed)) {
  if (source >= g.node_count()) throw ArgumentError("source node out of range");
  visit(g, source);
  frontier_.push_back({source, 0});
}

void SearchState::visit(const Graph& g, NodeId v) {
  visited_.set(v);
  visited_order_.push_back(v);
  if (!covered_.test(v)) {
    covered_.set(v);
    ++covered_count_;
  }
  for (NodeId w : g.neighbors(v)) {
    if (!covered_.test(w)) {
      covered_.set(w);
      ++covered_count_;
    }
  }
}

void SearchState::hop(const Graph& g, NodeId v) {
  ++steps_;
  current_ = v;
  if (!visited_.test(v)) visit(g, v);
}

std::optional<NodeId> SearchState::forward_from_head(const Graph& g) {
  if (frontier_.empty()) throw ExhaustedError("BFS frontier is empty");
  Holder& h = frontier_.front();
  auto adj = g.neighbors(h.node);
  while (h.cursor < adj.size() && visited_.test(adj[h.cursor])) ++h.cursor;
  if (h.cursor == adj.size()) {
    frontier_.pop_front();
    return std::nullopt;
  }
  const NodeId v = adj[h.cursor++];
  ++steps_;
  current_ = v;
  visit(g, v);
  frontier_.push_back({v, 0});
  return v;
}

namespace {

// Shared shape of XS/DS/RW: score the unvisited neighbors of c and take the
// best (uniform among ties); fall back to a uniform visited neighbor.
template <typename Score>
NodeId single_copy_step(const Graph& g, SearchState& st, Score score) {
  const NodeId c = st.current();
  auto adj = g.neighbors(c);
  if (adj.empty()) throw DeadEndError("node " + std::to_string(c) + " has no neighbors");

  bool found = false;
  std::size_t best_score = 0;
  std::size_t ties = 0;
  NodeId best = 0;
  for (NodeId v : adj) {
    if (st.is_visited(v)) continue;
    const std::size_t s = score(v);
    if (!found || s > best_score) {
      found = true;
      best_score = s;
      best = v;
      ties = 1;
    } else if (s == best_score) {
      // Reservoir draw keeps every tied candidate equally likely.
      ++ties;
      if (uniform_index(st.rng(), ties) == 0) best = v;
    }
  }
  if (!found) best = adj[uniform_index(st.rng(), adj.size())];
  st.hop(g, best);
  return best;
}

}  // namespace

NodeId step_xs(const Graph& g, SearchState& st) {
  return single_copy_step(g, st, [&](NodeId v) { return kernels::count_unflagged(g.neighbors(v), st.covered_flags()); });
}

NodeId step_ds(const Graph& g, SearchState& st) {
  return single_copy_step(g, st, [&](NodeId v) { return g.degree(v); });
}

NodeId step_rw(const Graph& g, SearchState& st) {
  return single_copy_step(g, st, [](NodeId) { return std::size_t{0}; });
}

NodeId step_bfs(const Graph& g, SearchState& st) {
  while (true) {
    if (auto v = st.forward_from_head(g)) return *v;
  }
}

NodeId step(Strategy s, const Graph& g, SearchState& st) {
  switch (s) {
    case Strategy::kXS: return step_xs(g, st);
    case Strategy::kDS: return step_ds(g, st);
    case Strategy::kRW: return step_rw(g, st);
    case Strategy::kBFS: return step_bfs(g, st);
  }
  throw ArgumentError("unknown strategy");
}

namespace {

std::size_t component_size(const Graph& g, NodeId source) {
  std::vector<std::uint8_t> seen(g.node_count(), 0);
  std::vector<NodeId> queue{source};
  seen[source] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : g.neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size();
}

}  // namespace

SearchTrace run_search(const Graph& g, Strategy strategy, NodeId source, const StopCondition& stop,
                       std::uint64_t seed) {
  if (source >= g.node_count()) throw ArgumentError("run_search: source not in graph");
  if (!(stop.coverage > 0.0 && stop.coverage <= 1.0)) {
    throw ArgumentError("run_search: coverage target must lie in (0, 1]");
  }
  if (stop.max_steps && *stop.max_steps < 1) throw ArgumentError("run_search: step budget must be >= 1");
  if (stop.target && *stop.target >= g.node_count()) throw ArgumentError("run_search: target not in graph");

  SearchState st(g, source, seed);
  SearchTrace trace;
  trace.strategy = strategy;
  trace.source = source;
  trace.node_count = g.node_count();
  trace.initial_covered = st.covered_count();
  const std::size_t reachable = component_size(g, source);

  while (true) {
    if (stop.target && st.is_covered(*stop.target)) {
      trace.termination = Termination::kTargetFound;
      break;
    }
    if (!stop.target && st.coverage_fraction() >= stop.coverage) {
      trace.termination = Termination::kCoverageReached;
      break;
    }
    if (stop.max_steps && st.steps() >= *stop.max_steps) {
      trace.termination = Termination::kStepBudget;
      break;
    }
    if (st.covered_count() == reachable) {
      trace.termination = Termination::kExhausted;
      break;
    }
    const NodeId v = step(strategy, g, st);
    trace.records.push_back({st.steps(), v, st.visited_count(), st.covered_count(), st.coverage_fraction()});
  }
  return trace;
}

std::optional<std::size_t> steps_to_coverage(const SearchTrace& trace, double fraction) {
  if (trace.initial_coverage() >= fraction) return 0;
  for (const auto& r : trace.records) {
    if (r.coverage_fraction >= fraction) return r.step;
  }
  return std::nullopt;
}

void write_trace_csv(std::ostream& out, const SearchTrace& trace) {
  out << "step,node,visited,covered,coverage_fraction\n";
  for (const auto& r : trace.records) {
    out << r.step << ',' << r.node << ',' << r.visited << ',' << r.covered << ',' << fmt6(r.coverage_fraction)
        << '\n';
  }
}

}  // namespace expsearch
