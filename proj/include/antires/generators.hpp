#pragma once

#include <cstdint>

#include "antires/graph.hpp"

namespace antires {

// Erdős–Rényi G(n, p). Pairs (u, v), u < v, are visited in lexicographic
// order; each draws one 64-bit output of std::mt19937_64 seeded with `seed`,
// whose top 53 bits give a uniform double in [0, 1), and the edge is kept when
// that double is < p. Both the engine and the conversion are fully specified,
// so a seed yields the same graph on every platform. Requires 0 <= p <= 1.
Graph generate_erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace antires
