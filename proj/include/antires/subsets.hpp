#pragma once

// Enumeration of vertex subsets in (size, lexicographic) order, serial and
// partitioned across worker threads. Parallel scans merge by enumeration
// index, so they return exactly what the serial scan returns.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "antires/graph.hpp"

namespace antires {

// C(n, r). Throws PreconditionError if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int r);

// Fills `out` (length r) with the r-combination of {0..m-1} of the given
// lexicographic rank.
void unrank_combination(int m, std::uint64_t rank, std::span<int> out);

// Advances `idx` to the next r-combination of {0..m-1} in lexicographic
// order. Returns false after the last one.
bool next_combination(int m, std::span<int> idx);

// Calls fn(subset) for every subset of `universe` with 1..max_size members in
// (size, lexicographic) order. `universe` must be strictly increasing. Stops
// early when fn returns false.
template <class Fn>
void for_each_subset(std::span<const VertexId> universe, int max_size, Fn&& fn) {
  const int m = static_cast<int>(universe.size());
  std::vector<int> idx;
  std::vector<VertexId> subset;
  for (int r = 1; r <= std::min(max_size, m); ++r) {
    idx.resize(static_cast<std::size_t>(r));
    subset.resize(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      for (int i = 0; i < r; ++i) {
        subset[static_cast<std::size_t>(i)] =
            universe[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      }
      if (!fn(std::span<const VertexId>(subset))) return;
    } while (next_combination(m, idx));
  }
}

struct ScanResult {
  int value = std::numeric_limits<int>::max();
  std::vector<VertexId> witness;  // first subset attaining `value`
  std::uint64_t examined = 0;
};

// Minimises eval(subset) over the subsets visited by for_each_subset. The scan
// stops at the first subset whose value is <= floor; `examined` counts the
// subsets up to and including that one (or all of them). make_eval() is
// called once per worker and must return a callable int(span<const VertexId>)
// owning its own scratch space.
template <class MakeEval>
ScanResult scan_minimum(std::span<const VertexId> universe, int max_size,
                        int threads, int floor, MakeEval&& make_eval) {
  ScanResult result;
  const int m = static_cast<int>(universe.size());
  threads = std::max(threads, 1);

  struct Local {
    int value = std::numeric_limits<int>::max();
    std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  };

  for (int r = 1; r <= std::min(max_size, m); ++r) {
    const std::uint64_t total = binomial(m, r);
    const std::uint64_t workers =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
    std::atomic<std::uint64_t> floor_at{std::numeric_limits<std::uint64_t>::max()};
    std::vector<Local> locals(static_cast<std::size_t>(workers));

    auto run_chunk = [&](std::uint64_t w) {
      auto eval = make_eval();
      const std::uint64_t begin = total * w / workers;
      const std::uint64_t end = total * (w + 1) / workers;
      std::vector<int> idx(static_cast<std::size_t>(r));
      std::vector<VertexId> subset(static_cast<std::size_t>(r));
      unrank_combination(m, begin, idx);
      Local& local = locals[static_cast<std::size_t>(w)];
      for (std::uint64_t i = begin; i < end; ++i) {
        if (i > floor_at.load(std::memory_order_relaxed)) break;
        for (int j = 0; j < r; ++j) {
          subset[static_cast<std::size_t>(j)] =
              universe[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
        }
        const int value = eval(std::span<const VertexId>(subset));
        if (value < local.value) {
          local.value = value;
          local.index = i;
        }
        if (value <= floor) {
          std::uint64_t seen = floor_at.load(std::memory_order_relaxed);
          while (i < seen && !floor_at.compare_exchange_weak(seen, i)) {
          }
          break;
        }
        next_combination(m, idx);
      }
    };

    if (workers == 1) {
      run_chunk(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
      for (auto& t : pool) t.join();
    }

    Local best;
    for (const Local& l : locals) {
      if (l.value < best.value || (l.value == best.value && l.index < best.index)) {
        best = l;
      }
    }
    if (best.value < result.value) {
      result.value = best.value;
      std::vector<int> idx(static_cast<std::size_t>(r));
      unrank_combination(m, best.index, idx);
      result.witness.clear();
      for (int i : idx) result.witness.push_back(universe[static_cast<std::size_t>(i)]);
    }
    const std::uint64_t stop = floor_at.load();
    if (stop != std::numeric_limits<std::uint64_t>::max()) {
      result.examined += stop + 1;
      return result;
    }
    result.examined += total;
  }
  return result;
}

}  // namespace antires
