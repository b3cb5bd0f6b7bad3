#include "antires/generators.hpp"

#include <random>

#include "antires/errors.hpp"

namespace antires {

Graph generate_erdos_renyi(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
  if (n < 0) throw PreconditionError("negative vertex count");
  std::mt19937_64 engine(seed);
  AdjacencyMatrix m(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const double draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (draw < p) m.set(u, v);
    }
  }
  return Graph::from_matrix(std::move(m));
}

}  // namespace antires
