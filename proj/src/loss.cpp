#include "antires/loss.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "antires/errors.hpp"

namespace antires {

LossReport compute_loss(const Graph& original, const Graph& published) {
  if (original.order() != published.order()) {
    throw PreconditionError("compute_loss: vertex sets differ (" +
                            std::to_string(original.order()) + " vs " +
                            std::to_string(published.order()) + " vertices)");
  }
  const int n = original.order();
  LossReport r;
  // Count upper-triangle bits only.
  for (VertexId u = 0; u < n; ++u) {
    const auto a = original.matrix().row(u);
    const auto b = published.matrix().row(u);
    for (std::size_t w = 0; w < a.size(); ++w) {
      std::uint64_t above = ~std::uint64_t{0};
      const int first = u + 1 - static_cast<int>(w) * 64;
      if (first >= 64) {
        above = 0;
      } else if (first > 0) {
        above <<= first;
      }
      r.additions += static_cast<std::size_t>(std::popcount(b[w] & ~a[w] & above));
      r.removals += static_cast<std::size_t>(std::popcount(a[w] & ~b[w] & above));
    }
  }
  r.edge_edit_distance = r.additions + r.removals;

  auto da = original.degrees();
  auto db = published.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  for (std::size_t i = 0; i < da.size(); ++i) {
    r.degree_shift += static_cast<std::size_t>(std::abs(da[i] - db[i]));
  }

  if (n >= 2) {
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    r.density_delta = (static_cast<double>(published.edge_count()) -
                       static_cast<double>(original.edge_count())) /
                      pairs;
  }
  return r;
}

}  // namespace antires
