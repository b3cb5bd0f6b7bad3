#include "antires/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "antires/errors.hpp"

namespace antires {

AdjacencyMatrix::AdjacencyMatrix(int n)
    : n_(n),
      words_((n + 63) / 64),
      bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>((n + 63) / 64),
            0) {}

void AdjacencyMatrix::set(VertexId u, VertexId v) {
  bits_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void AdjacencyMatrix::reset(VertexId u, VertexId v) {
  bits_[row_offset(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[row_offset(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

void check_vertex(const Graph& g, VertexId u) {
  if (!g.contains(u)) {
    throw GraphError(GraphErrorKind::kIdOutOfRange,
                     "vertex id " + std::to_string(u) + " out of range [0," +
                         std::to_string(g.order()) + ")");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) {
    throw GraphError(GraphErrorKind::kNegativeOrder,
                     "negative vertex count " + std::to_string(n));
  }
  AdjacencyMatrix m(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError(GraphErrorKind::kIdOutOfRange,
                       "edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ") has an id outside [0," +
                           std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw GraphError(GraphErrorKind::kSelfLoop,
                       "self-loop on vertex " + std::to_string(e.u));
    }
    if (m.test(e.u, e.v)) {
      const Edge c = e.canonical();
      throw GraphError(GraphErrorKind::kDuplicateEdge,
                       "duplicate edge (" + std::to_string(c.u) + "," +
                           std::to_string(c.v) + ")");
    }
    m.set(e.u, e.v);
  }
  return from_matrix(std::move(m));
}

Graph Graph::from_matrix(AdjacencyMatrix matrix) {
  Graph g;
  const int n = matrix.order();
  g.neighbours_.resize(static_cast<std::size_t>(n));
  std::size_t degree_sum = 0;
  for (VertexId u = 0; u < n; ++u) {
    const auto row = matrix.row(u);
    auto& out = g.neighbours_[static_cast<std::size_t>(u)];
    for (int w = 0; w < matrix.words_per_row(); ++w) {
      std::uint64_t bits = row[static_cast<std::size_t>(w)];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        out.push_back(w * 64 + bit);
        bits &= bits - 1;
      }
    }
    degree_sum += out.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.matrix_ = std::move(matrix);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbours(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(static_cast<std::size_t>(order()));
  for (VertexId u = 0; u < order(); ++u) out[static_cast<std::size_t>(u)] = degree(u);
  return out;
}

Graph Graph::with_edge(Edge e) const {
  check_vertex(*this, e.u);
  check_vertex(*this, e.v);
  if (e.u == e.v) {
    throw GraphError(GraphErrorKind::kSelfLoop,
                     "self-loop on vertex " + std::to_string(e.u));
  }
  if (adjacent(e.u, e.v)) {
    throw GraphError(GraphErrorKind::kDuplicateEdge,
                     "edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ") already present");
  }
  AdjacencyMatrix m = matrix_;
  m.set(e.u, e.v);
  return from_matrix(std::move(m));
}

Graph Graph::without_edge(Edge e) const {
  check_vertex(*this, e.u);
  check_vertex(*this, e.v);
  if (e.u == e.v || !adjacent(e.u, e.v)) {
    throw PreconditionError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") not present");
  }
  AdjacencyMatrix m = matrix_;
  m.reset(e.u, e.v);
  return from_matrix(std::move(m));
}

bool Graph::is_complete() const {
  const auto n = static_cast<std::size_t>(order());
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  AdjacencyMatrix m(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) m.set(u, v);
  }
  return Graph::from_matrix(std::move(m));
}

Graph empty_graph(int n) {
  if (n < 0) {
    throw GraphError(GraphErrorKind::kNegativeOrder,
                     "negative vertex count " + std::to_string(n));
  }
  return Graph::from_matrix(AdjacencyMatrix(n));
}

int adjacency_value(const Graph& g, VertexId u, VertexId v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) return 0;
  return g.adjacent(u, v) ? 1 : 2;
}

std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
  check_vertex(g, source);
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), kInfinity);
  std::vector<VertexId> frontier{source};
  std::vector<VertexId> next;
  dist[static_cast<std::size_t>(source)] = 0;
  Distance level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (VertexId u : frontier) {
      for (VertexId w : g.neighbours(u)) {
        auto& d = dist[static_cast<std::size_t>(w)];
        if (d == kInfinity) {
          d = level;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return dist;
}

Distance distance(const Graph& g, VertexId u, VertexId v) {
  check_vertex(g, v);
  if (u == v) {
    check_vertex(g, u);
    return 0;
  }
  return bfs_distances(g, u)[static_cast<std::size_t>(v)];
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  d_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
  for (VertexId u = 0; u < n_; ++u) {
    const auto row = bfs_distances(g, u);
    d_.insert(d_.end(), row.begin(), row.end());
  }
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const VertexId> vertices) {
  std::vector<VertexId> ids(vertices.begin(), vertices.end());
  for (VertexId u : ids) check_vertex(g, u);
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw PreconditionError("induced_subgraph: repeated vertex in subset");
  }
  const int k = static_cast<int>(ids.size());
  AdjacencyMatrix m(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(ids[static_cast<std::size_t>(i)],
                     ids[static_cast<std::size_t>(j)])) {
        m.set(i, j);
      }
    }
  }
  return {Graph::from_matrix(std::move(m)), std::move(ids)};
}

VertexClassReport classify_vertices(const Graph& g) {
  if (g.order() < 1) {
    throw PreconditionError("classify_vertices: graph has no vertices");
  }
  VertexClassReport r;
  const int n = g.order();
  r.min_degree = n;
  r.max_degree = 0;
  for (VertexId u = 0; u < n; ++u) {
    const int d = g.degree(u);
    r.min_degree = std::min(r.min_degree, d);
    r.max_degree = std::max(r.max_degree, d);
    if (d == 0) r.isolated.push_back(u);
    // With n == 1 the lone vertex is isolated; D_G is only meaningful for n > 1.
    if (d == n - 1 && n > 1) r.dominant.push_back(u);
  }
  return r;
}

}  // namespace antires
