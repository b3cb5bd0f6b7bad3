#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace antires {

// Vertices are dense ids 0..n-1. Ids are stable across edits, so a graph and
// its perturbed copy share vertex identity by id.
using VertexId = int;

// Hop count. Vertices in different components are kInfinity apart.
using Distance = std::uint32_t;
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

// Undirected edge. Canonical form has u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge canonical() const { return u < v ? Edge{u, v} : Edge{v, u}; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Symmetric n x n bit matrix. Each row is packed into 64-bit words, which
// makes neighbourhood unions and adjacency-representation keys cheap.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(int n);

  int order() const { return n_; }
  int words_per_row() const { return words_; }

  bool test(VertexId u, VertexId v) const {
    return (bits_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  // Both set() and reset() keep the matrix symmetric.
  void set(VertexId u, VertexId v);
  void reset(VertexId u, VertexId v);

  std::span<const std::uint64_t> row(VertexId u) const {
    return {bits_.data() + row_offset(u), static_cast<std::size_t>(words_)};
  }

  friend bool operator==(const AdjacencyMatrix&,
                         const AdjacencyMatrix&) = default;

 private:
  std::size_t row_offset(VertexId u) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(words_);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Immutable undirected simple graph. Edits return new values.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on negative n, out-of-range ids, self-loops and
  // duplicate edges ((u,v) and (v,u) count as the same edge).
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_matrix(AdjacencyMatrix matrix);

  int order() const { return matrix_.order(); }
  std::size_t edge_count() const { return edge_count_; }
  bool contains(VertexId u) const { return u >= 0 && u < order(); }

  // Unchecked; callers validate ids.
  bool adjacent(VertexId u, VertexId v) const { return matrix_.test(u, v); }
  int degree(VertexId u) const {
    return static_cast<int>(neighbours_[static_cast<std::size_t>(u)].size());
  }
  std::span<const VertexId> neighbours(VertexId u) const {
    return neighbours_[static_cast<std::size_t>(u)];
  }
  const AdjacencyMatrix& matrix() const { return matrix_; }

  // Canonical (u < v) edges in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  Graph with_edge(Edge e) const;
  Graph without_edge(Edge e) const;

  bool is_complete() const;
  // No edges at all (N_n), regardless of order.
  bool is_edgeless() const { return edge_count_ == 0; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.matrix_ == b.matrix_;
  }

 private:
  AdjacencyMatrix matrix_;
  std::vector<std::vector<VertexId>> neighbours_;
  std::size_t edge_count_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph complete_graph(int n);
Graph empty_graph(int n);

// 0 if u == v, 1 if adjacent, 2 otherwise (including different components).
int adjacency_value(const Graph& g, VertexId u, VertexId v);

// BFS hop count, kInfinity when no path exists.
Distance distance(const Graph& g, VertexId u, VertexId v);
std::vector<Distance> bfs_distances(const Graph& g, VertexId source);

// All-pairs BFS distances. Bound to the graph value it was built from, so an
// edit (which yields a new Graph) needs a new matrix.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  Distance at(VertexId u, VertexId v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }
  std::span<const Distance> row(VertexId u) const {
    return {d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_),
            static_cast<std::size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<Distance> d_;
};

struct InducedSubgraph {
  Graph graph;
  // original_id[i] is the id in the parent graph of subgraph vertex i.
  std::vector<VertexId> original_id;
};

// Subgraph induced by `vertices` (any order, duplicates rejected). Subgraph
// ids follow increasing original id.
InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const VertexId> vertices);

struct VertexClassReport {
  std::vector<VertexId> isolated;  // degree 0
  std::vector<VertexId> dominant;  // degree n-1
  int min_degree = 0;
  int max_degree = 0;
};

// Requires n >= 1.
VertexClassReport classify_vertices(const Graph& g);

void check_vertex(const Graph& g, VertexId u);

}  // namespace antires
