#pragma once

#include <cstdint>

#include "expsearch/graph.hpp"

namespace expsearch {

// G(n, p): every unordered pair joined independently with probability p.
Graph generate_er(std::size_t n, double p, std::uint64_t seed);

// Preferential attachment grown from an (m+1)-clique; each new node links to
// m distinct existing nodes drawn proportionally to degree.
Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace expsearch
