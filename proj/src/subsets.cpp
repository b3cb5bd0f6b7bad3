#include "antires/subsets.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "antires/errors.hpp"

namespace antires {

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Wide c = 1;
  for (int i = 1; i <= r; ++i) {
    c = c * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw PreconditionError("C(" + std::to_string(n) + "," +
                              std::to_string(r) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

void unrank_combination(int m, std::uint64_t rank, std::span<int> out) {
  const int r = static_cast<int>(out.size());
  int next = 0;
  for (int pos = 0; pos < r; ++pos) {
    // Skip whole blocks of combinations that start with `next`.
    for (;; ++next) {
      const std::uint64_t block = binomial(m - next - 1, r - pos - 1);
      if (rank < block) break;
      rank -= block;
    }
    out[static_cast<std::size_t>(pos)] = next++;
  }
}

bool next_combination(int m, std::span<int> idx) {
  const int r = static_cast<int>(idx.size());
  int i = r - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

}  // namespace antires
