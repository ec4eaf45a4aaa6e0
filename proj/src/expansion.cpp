#include "expsearch/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "expsearch/rng.hpp"

namespace expsearch {

FrontierState::FrontierState(const Graph& g)
    : graph_(&g), in_sample_(g.node_count()), covered_(g.node_count()) {}

std::size_t FrontierState::add(NodeId v) {
  if (in_sample_.test(v)) return 0;
  in_sample_.set(v);
  sample_.push_back(v);
  std::size_t fresh = 0;
  if (!covered_.test(v)) {
    covered_.set(v);
    ++fresh;
  }
  for (NodeId w : graph_->neighbors(v)) {
    if (!covered_.test(w)) {
      covered_.set(w);
      ++fresh;
    }
  }
  covered_count_ += fresh;
  return fresh;
}

std::vector<NodeId> FrontierState::neighborhood() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < graph_->node_count(); ++v) {
    if (in_neighborhood(v)) out.push_back(v);
  }
  return out;
}

Ratio FrontierState::expansion() const { return {neighborhood_size(), sample_.size()}; }

Ratio FrontierState::quality() const {
  return {neighborhood_size(), graph_->node_count() - sample_.size()};
}

namespace {

FrontierState frontier_of(const Graph& g, std::span<const NodeId> sample) {
  if (sample.empty()) throw ArgumentError("sample must be nonempty");
  FrontierState st(g);
  for (NodeId v : sample) {
    if (v >= g.node_count()) throw ArgumentError("sample node id out of range");
    st.add(v);
  }
  if (st.sample_size() == g.node_count()) throw ArgumentError("sample must be a proper subset of V");
  return st;
}

// Max-tree over per-node 64-bit scores; a score of 0 marks an ineligible node.
class ScoreTree {
 public:
  explicit ScoreTree(std::size_t n) {
    size_ = 1;
    while (size_ < n) size_ <<= 1;
    tree_.assign(2 * size_, 0);
  }
  void set(std::size_t leaf, std::uint64_t score) {
    std::size_t i = leaf + size_;
    tree_[i] = score;
    for (i >>= 1; i >= 1; i >>= 1) tree_[i] = std::max(tree_[2 * i], tree_[2 * i + 1]);
  }
  std::uint64_t top() const { return tree_[1]; }

 private:
  std::size_t size_;
  std::vector<std::uint64_t> tree_;
};

}  // namespace

Ratio expansion(const Graph& g, std::span<const NodeId> sample) {
  return frontier_of(g, sample).expansion();
}

Ratio expansion_quality(const Graph& g, std::span<const NodeId> sample) {
  return frontier_of(g, sample).quality();
}

GreedyResult greedy_apx(const Graph& g, std::size_t k, GreedyMode mode, const GreedyOptions& options) {
  const std::size_t n = g.node_count();
  if (k < 1 || k >= n) throw ArgumentError("greedy_apx: k must satisfy 1 <= k < |V|");

  // rank[v] orders ties: smaller rank wins.
  std::vector<std::uint32_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0u);
  if (options.tie_seed) {
    Rng rng = make_rng(*options.tie_seed);
    for (std::size_t i = n; i > 1; --i) std::swap(rank[i - 1], rank[uniform_index(rng, i)]);
  }
  std::vector<NodeId> by_rank(n);
  for (NodeId v = 0; v < n; ++v) by_rank[rank[v]] = v;

  std::size_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));

  std::vector<std::size_t> gain(n);
  for (NodeId v = 0; v < n; ++v) gain[v] = g.degree(v);

  FrontierState st(g);
  // Larger score is better. Layout: [gain key | tie preference bit | ~rank].
  auto score = [&](NodeId v) -> std::uint64_t {
    const std::uint64_t low = 0xFFFFFFFFull - rank[v];
    if (mode == GreedyMode::kMaximize) {
      const std::uint64_t keeps_neighborhood = st.is_covered(v) ? 0 : 1;
      return (static_cast<std::uint64_t>(gain[v]) << 33) | (keeps_neighborhood << 32) | low;
    }
    const std::uint64_t shrinks_neighborhood = st.is_covered(v) ? 1 : 0;
    return (static_cast<std::uint64_t>(max_degree - gain[v]) << 33) | (shrinks_neighborhood << 32) | low;
  };

  ScoreTree tree(n);
  for (NodeId v = 0; v < n; ++v) tree.set(v, score(v));

  GreedyResult result;
  result.sample.reserve(k);
  result.trajectory.reserve(k);
  std::vector<NodeId> fresh;
  while (st.sample_size() < k) {
    const auto top = tree.top();
    const NodeId v = by_rank[0xFFFFFFFFull - (top & 0xFFFFFFFFull)];

    fresh.clear();
    if (!st.is_covered(v)) fresh.push_back(v);
    for (NodeId w : g.neighbors(v)) {
      if (!st.is_covered(w)) fresh.push_back(w);
    }
    st.add(v);
    tree.set(v, 0);
    for (NodeId w : fresh) {
      if (!st.in_sample(w)) tree.set(w, score(w));
      for (NodeId u : g.neighbors(w)) {
        --gain[u];
        if (!st.in_sample(u)) tree.set(u, score(u));
      }
    }

    result.sample.push_back(v);
    result.trajectory.push_back({st.sample_size(), v, st.covered_size(), st.expansion(), st.quality()});
  }
  return result;
}

namespace {

// C(n, k) saturating at limit + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(c);
}

}  // namespace

BruteForceResult brute_force_max_expansion(const Graph& g, std::size_t k, std::uint64_t budget) {
  const std::size_t n = g.node_count();
  if (k < 1 || k >= n) throw ArgumentError("brute_force_max_expansion: k must satisfy 1 <= k < |V|");
  if (binomial_capped(n, k, budget) > budget) {
    throw BudgetExceeded("brute_force_max_expansion: C(" + std::to_string(n) + ", " + std::to_string(k) +
                         ") exceeds the enumeration budget of " + std::to_string(budget));
  }

  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> closed(n * words, 0);
  for (NodeId v = 0; v < n; ++v) {
    std::uint64_t* row = &closed[v * words];
    row[v / 64] |= 1ull << (v % 64);
    for (NodeId w : g.neighbors(v)) row[w / 64] |= 1ull << (w % 64);
  }

  std::vector<NodeId> combo(k);
  std::iota(combo.begin(), combo.end(), 0u);
  std::vector<std::uint64_t> acc(words);
  BruteForceResult best;
  bool have = false;
  while (true) {
    std::fill(acc.begin(), acc.end(), 0);
    for (NodeId v : combo) {
      const std::uint64_t* row = &closed[v * words];
      for (std::size_t i = 0; i < words; ++i) acc[i] |= row[i];
    }
    std::size_t covered = 0;
    for (auto w : acc) covered += static_cast<std::size_t>(__builtin_popcountll(w));
    if (!have || covered > best.covered) {
      have = true;
      best.covered = covered;
      best.sample = combo;
    }

    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  best.expansion = {best.covered - k, k};
  return best;
}

}  // namespace expsearch
