#include "expsearch/signature.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "expsearch/csv.hpp"

namespace expsearch {

std::vector<double> default_fractions() {
  std::vector<double> f;
  for (int i = 1; i <= 50; ++i) f.push_back(i / 100.0);
  return f;
}

std::size_t sample_size_for(double fraction, std::size_t n) {
  // The epsilon absorbs representation error, e.g. 0.07 * 100 = 7.000000000000001.
  const double raw = fraction * static_cast<double>(n);
  auto k = static_cast<std::size_t>(std::ceil(raw - 1e-9));
  return std::clamp<std::size_t>(k, 1, n - 1);
}

ExpansionSignature build_signature(const Graph& g, const std::vector<double>& fractions, std::string graph_id) {
  if (fractions.empty()) throw ArgumentError("build_signature: no fractions given");
  if (g.node_count() < 2) throw ArgumentError("build_signature: graph needs at least two nodes");
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    if (!(fractions[i] > 0.0 && fractions[i] < 1.0)) {
      throw ArgumentError("build_signature: fractions must lie in (0, 1)");
    }
    if (i > 0 && fractions[i] < fractions[i - 1]) {
      throw ArgumentError("build_signature: fractions must be sorted ascending");
    }
  }

  const std::size_t n = g.node_count();
  const std::size_t k_max = sample_size_for(fractions.back(), n);
  const auto hi = greedy_apx(g, k_max, GreedyMode::kMaximize);
  const auto lo = greedy_apx(g, k_max, GreedyMode::kMinimize);

  ExpansionSignature sig;
  sig.graph_id = std::move(graph_id);
  sig.node_count = n;
  for (double f : fractions) {
    const std::size_t k = sample_size_for(f, n);
    if (!sig.points.empty() && sig.points.back().k >= k) continue;
    const auto& a = hi.trajectory[k - 1];
    const auto& b = lo.trajectory[k - 1];
    sig.points.push_back({k, static_cast<double>(k) / static_cast<double>(n), a.expansion, a.quality,
                          b.expansion, b.quality});
  }
  return sig;
}

std::optional<SignaturePoint> dominating_threshold(const ExpansionSignature& sig) {
  for (const auto& p : sig.points) {
    if (p.max_quality.num == p.max_quality.den) return p;
  }
  return std::nullopt;
}

void write_signature_csv(std::ostream& out, const ExpansionSignature& sig) {
  out << "k,fraction,max_expansion,max_quality,min_expansion,min_quality\n";
  for (const auto& p : sig.points) {
    out << p.k << ',' << fmt6(p.fraction) << ',' << fmt6(p.max_expansion.value()) << ','
        << fmt6(p.max_quality.value()) << ',' << fmt6(p.min_expansion.value()) << ','
        << fmt6(p.min_quality.value()) << '\n';
  }
}

}  // namespace expsearch
