#pragma once

#include <cstddef>

#include "antires/graph.hpp"

namespace antires {

// Information lost by publishing `published` instead of `original`. The edge
// edit distance is the default cost.
struct LossReport {
  std::size_t edge_edit_distance = 0;  // |E xor E'|
  std::size_t additions = 0;           // |E' \ E|
  std::size_t removals = 0;            // |E \ E'|
  // L1 distance between the sorted degree sequences.
  std::size_t degree_shift = 0;
  // |E'|/C(n,2) - |E|/C(n,2); zero when n < 2.
  double density_delta = 0.0;
};

// Both graphs must have the same vertex set (same order).
LossReport compute_loss(const Graph& original, const Graph& published);

}  // namespace antires
