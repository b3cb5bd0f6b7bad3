#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "antires/graph.hpp"

namespace antires {

// What the adversary learns about a vertex from a probe set: exact distances
// (metric) or only adjacent / not adjacent (adjacency).
enum class Flavor { kMetric, kAdjacency };

std::string_view to_string(Flavor f);
// Accepts "metric" and "adjacency".
std::optional<Flavor> parse_flavor(std::string_view text);

// Non-empty, strictly increasing set of vertex ids. The ordering fixes the
// coordinate order of representations.
class ProbeSet {
 public:
  // Sorts `members`; throws PreconditionError if empty, negative or repeated.
  explicit ProbeSet(std::vector<VertexId> members);
  ProbeSet(std::initializer_list<VertexId> members)
      : ProbeSet(std::vector<VertexId>(members)) {}

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(VertexId u) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const ProbeSet&, const ProbeSet&) = default;
  // Size first, then lexicographic: the enumeration order used everywhere.
  friend std::strong_ordering operator<=>(const ProbeSet& a, const ProbeSet& b);

 private:
  std::vector<VertexId> members_;
};

struct Representation {
  Flavor flavor = Flavor::kAdjacency;
  // Metric: distances (kInfinity across components). Adjacency: 1 or 2.
  std::vector<Distance> coords;

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct VertexClass {
  Representation representation;
  std::vector<VertexId> members;  // increasing
};

// Equivalence classes of V \ S under equal representation, ordered by their
// smallest member.
struct ClassPartition {
  ProbeSet probe;
  std::vector<VertexClass> classes;
  int k_value = 0;  // size of the smallest class

  // Index into `classes` of the class holding u, or nullopt for u in S.
  std::optional<std::size_t> class_of(VertexId u) const;
};

struct AnonymityReport {
  int ell = 0;
  Flavor mode = Flavor::kAdjacency;
  int k = 0;
  ProbeSet witness{0};
  std::uint64_t sets_examined = 0;
  std::chrono::nanoseconds elapsed{0};
};

Representation representation(const Graph& g, VertexId u, const ProbeSet& s,
                              Flavor flavor);
ClassPartition partition(const Graph& g, const ProbeSet& s, Flavor flavor);

// The k for which s is a k-(adjacency-)antiresolving set.
int antiresolving_k(const Graph& g, const ProbeSet& s, Flavor flavor);

// Scratch space for computing minimum class sizes of many probe sets without
// materialising partitions. Probe members must be distinct and leave at least
// one vertex outside.
class KEvaluator {
 public:
  int adjacency(const AdjacencyMatrix& m, std::span<const VertexId> s);
  int metric(const DistanceMatrix& d, std::span<const VertexId> s);

 private:
  std::vector<char> in_probe_;
  std::vector<std::uint64_t> keys_;
  std::vector<Distance> wide_keys_;
  std::vector<int> order_;
};

struct Antidimension {
  int size = 0;
  ProbeSet witness{0};
};

// Smallest |S| <= max_size whose antiresolving value is exactly k, found by
// exhaustive (size, lexicographic) search. nullopt when no such S exists
// within the bound.
std::optional<Antidimension> antidimension(const Graph& g, int k, int max_size,
                                           Flavor flavor, int threads = 1);
std::optional<Antidimension> k_adjacency_antidimension(const Graph& g, int k,
                                                       int max_size);

// The k of (k, ell)-(adjacency-)anonymity: the minimum antiresolving value
// over every probe set of size <= ell. The witness is the first minimiser in
// (size, lexicographic) order. Requires 1 <= ell < n.
AnonymityReport anonymity_value(const Graph& g, int ell, Flavor flavor,
                                int threads = 1);

// All 1-adjacency antiresolving sets of size <= ell, in (size, lexicographic)
// order.
std::vector<ProbeSet> enumerate_bad_sets(const Graph& g, int ell);

// Pairs (id in the first graph, id in the second graph) naming the vertices
// the two graphs have in common.
using VertexMatching = std::vector<std::pair<VertexId, VertexId>>;

// Identity matching on ids 0..min(n1,n2)-1.
VertexMatching shared_ids(const Graph& g1, const Graph& g2);

struct TransformationCheck {
  bool holds = true;
  // First violating probe set in (size, lexicographic) order, as ids of the
  // first graph, with its values in both graphs.
  std::optional<ProbeSet> counterexample;
  int k_original = 0;
  int k_published = 0;
};

// Whether (g1, g2) is a (k, ell)-(adjacency-)anonymous transformation: every
// shared probe set of size <= ell that is below k in g1 reaches >= k in g2.
TransformationCheck is_transformation(const Graph& g1, const Graph& g2, int k,
                                      int ell, Flavor flavor, int threads = 1);
TransformationCheck is_transformation(const Graph& g1, const Graph& g2,
                                      const VertexMatching& shared, int k,
                                      int ell, Flavor flavor, int threads = 1);

// Closed-form (k,1)-adjacency anonymity value from degrees alone, dispatched on
// whether the graph has isolated or dominant vertices. Complete and edgeless
// graphs give n-1. Requires n >= 2.
int k1_value_formula(const Graph& g);

// floor((n-1)/2), the largest (k,1)-adjacency anonymity value a non-complete,
// non-edgeless graph can have. nullopt (unbounded) for complete and edgeless
// graphs, which reach n-1. Requires n >= 2.
std::optional<int> k1_upper_bound(const Graph& g);

}  // namespace antires
