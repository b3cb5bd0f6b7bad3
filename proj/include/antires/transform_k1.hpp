#pragma once

#include <vector>

#include "antires/edit_script.hpp"
#include "antires/errors.hpp"
#include "antires/graph.hpp"

namespace antires {

// Degree-driven perturbation towards a (k,1)-adjacency anonymous
// transformation. Vertices whose degree sits in [1, k) ("low") gain edges,
// preferably among themselves; vertices whose degree sits in (n-k-1, n-2]
// ("high") lose edges, preferably among themselves. Ties in every argmax /
// argmin go to the smallest vertex id.

struct EditBounds {
  int lower = 0;
  int upper = 0;

  friend bool operator==(const EditBounds&, const EditBounds&) = default;
};

struct K1Bounds {
  int missing_initial = 0;  // total degree deficit of the low vertices in G
  EditBounds added;
  int excess_at_gt = 0;  // total degree surplus of the high vertices after additions
  EditBounds removed;
};

struct K1Report {
  int k0 = 0;
  int k = 0;
  std::vector<VertexId> low_set_initial;
  std::vector<VertexId> high_set_initial;
  int additions = 0;  // t
  int removals = 0;   // t'
  K1Bounds bounds;
};

struct K1Result {
  Graph graph;
  EditScript script;
  K1Report report;
};

// A fallback selection found no admissible partner. Fallback partners exclude
// vertices that were low or high in the input, are back inside the degree
// window [k, n-k-1], and would leave it again through the edit; the removal
// fallback also excludes every initial low vertex.
class InfeasibleError : public Error {
 public:
  InfeasibleError(VertexId vertex, const std::string& what)
      : Error(what), vertex_(vertex) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

// Requires g neither complete nor edgeless and k0 < k <= floor((n-1)/2), where
// k0 is the (k,1)-adjacency anonymity value of g; throws PreconditionError
// otherwise and InfeasibleError when a fallback selection is empty.
K1Result transform_k1(const Graph& g, int k);

// ceil(m/2) and m, where m is the summed deficit k - deg(u) over vertices with
// 1 <= deg(u) < k.
EditBounds bounds_added(const Graph& g, int k);

// Bounds on removals given the graph after the addition phase. Sums the
// surplus k - (n - deg_t(u) - 1) over vertices high in g that are still high
// in g_t.
EditBounds bounds_removed(const Graph& g_t, const Graph& g, int k);

}  // namespace antires
