#include "antires/transform_k1.hpp"

#include <string>

#include "antires/antiresolving.hpp"

namespace antires {

namespace {

// Mutable working copy: adjacency bits plus a degree table.
struct WorkGraph {
  explicit WorkGraph(const Graph& g) : matrix(g.matrix()), degree(g.degrees()) {}

  int n() const { return matrix.order(); }
  int deg(VertexId u) const { return degree[static_cast<std::size_t>(u)]; }
  bool adjacent(VertexId u, VertexId v) const { return matrix.test(u, v); }

  void add(VertexId u, VertexId v) {
    matrix.set(u, v);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  void remove(VertexId u, VertexId v) {
    matrix.reset(u, v);
    --degree[static_cast<std::size_t>(u)];
    --degree[static_cast<std::size_t>(v)];
  }

  AdjacencyMatrix matrix;
  std::vector<int> degree;
};

bool is_low(int degree, int k) { return degree >= 1 && degree < k; }
bool is_high(int degree, int n, int k) {
  return degree > n - k - 1 && degree <= n - 2;
}

template <class Pred>
std::vector<VertexId> filter(const std::vector<VertexId>& from, Pred pred) {
  std::vector<VertexId> out;
  for (VertexId u : from) {
    if (pred(u)) out.push_back(u);
  }
  return out;
}

// First vertex (in increasing id order) maximising / minimising degree.
VertexId argmax_degree(const WorkGraph& w, const std::vector<VertexId>& among) {
  VertexId best = among.front();
  for (VertexId u : among) {
    if (w.deg(u) > w.deg(best)) best = u;
  }
  return best;
}

VertexId argmin_degree(const WorkGraph& w, const std::vector<VertexId>& among) {
  VertexId best = among.front();
  for (VertexId u : among) {
    if (w.deg(u) < w.deg(best)) best = u;
  }
  return best;
}

std::vector<char> membership(int n, const std::vector<VertexId>& set) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (VertexId u : set) in[static_cast<std::size_t>(u)] = 1;
  return in;
}

}  // namespace

EditBounds bounds_added(const Graph& g, int k) {
  int missing = 0;
  for (VertexId u = 0; u < g.order(); ++u) {
    if (is_low(g.degree(u), k)) missing += k - g.degree(u);
  }
  return {(missing + 1) / 2, missing};
}

EditBounds bounds_removed(const Graph& g_t, const Graph& g, int k) {
  if (g_t.order() != g.order()) {
    throw PreconditionError("bounds_removed: graphs differ in order");
  }
  const int n = g.order();
  int excess = 0;
  for (VertexId u = 0; u < n; ++u) {
    if (is_high(g.degree(u), n, k) && is_high(g_t.degree(u), n, k)) {
      excess += k - (n - g_t.degree(u) - 1);
    }
  }
  return {(excess + 1) / 2, excess};
}

K1Result transform_k1(const Graph& g, int k) {
  const int n = g.order();
  if (n < 2 || g.is_complete() || g.is_edgeless()) {
    throw PreconditionError(
        "transform_k1 needs a graph that is neither complete nor edgeless");
  }
  const int k0 = k1_value_formula(g);
  const int k_max = (n - 1) / 2;
  if (k <= k0 || k > k_max) {
    throw PreconditionError("target k=" + std::to_string(k) +
                            " outside [k0+1, floor((n-1)/2)] = [" +
                            std::to_string(k0 + 1) + ", " +
                            std::to_string(k_max) + "]");
  }

  WorkGraph w(g);
  std::vector<VertexId> all(static_cast<std::size_t>(n));
  for (VertexId u = 0; u < n; ++u) all[static_cast<std::size_t>(u)] = u;

  K1Result result;
  K1Report& report = result.report;
  report.k0 = k0;
  report.k = k;
  report.low_set_initial = filter(all, [&](VertexId u) { return is_low(w.deg(u), k); });
  report.high_set_initial =
      filter(all, [&](VertexId u) { return is_high(w.deg(u), n, k); });
  report.bounds.added = bounds_added(g, k);
  report.bounds.missing_initial = report.bounds.added.upper;

  // A fallback partner may not be a repaired low or high vertex that the edit
  // would push back out of the degree window [k, n-k-1].
  const auto in_low_initial = membership(n, report.low_set_initial);
  const auto in_high_initial = membership(n, report.high_set_initial);
  auto pushed_out = [&](VertexId y, int new_degree) {
    const auto i = static_cast<std::size_t>(y);
    if (!in_low_initial[i] && !in_high_initial[i]) return false;
    const bool inside = w.deg(y) >= k && w.deg(y) <= n - k - 1;
    return inside && (new_degree < k || new_degree > n - k - 1);
  };

  // Addition phase.
  std::vector<VertexId> low = report.low_set_initial;
  while (!low.empty()) {
    const auto in_low = membership(n, low);
    const auto x_set = filter(low, [&](VertexId x) {
      for (VertexId y : low) {
        if (y != x && !w.adjacent(x, y)) return true;
      }
      return false;
    });
    VertexId u;
    VertexId v;
    if (!x_set.empty()) {
      u = argmax_degree(w, x_set);
      const auto y_set =
          filter(low, [&](VertexId y) { return y != u && !w.adjacent(u, y); });
      v = argmax_degree(w, y_set);
    } else {
      u = argmax_degree(w, low);
      const auto y_set = filter(all, [&](VertexId y) {
        return !in_low[static_cast<std::size_t>(y)] && !w.adjacent(u, y) &&
               !pushed_out(y, w.deg(y) + 1);
      });
      if (y_set.empty()) {
        throw InfeasibleError(u, "low vertex " + std::to_string(u) +
                                     " has no admissible partner outside "
                                     "the low set");
      }
      v = argmin_degree(w, y_set);
    }
    w.add(u, v);
    result.script.add({u, v});
    ++report.additions;
    low = filter(low, [&](VertexId x) { return is_low(w.deg(x), k); });
  }

  const Graph after_additions = Graph::from_matrix(w.matrix);
  report.bounds.removed = bounds_removed(after_additions, g, k);
  report.bounds.excess_at_gt = report.bounds.removed.upper;

  // Removal phase. Vertices of the initial low set are never picked as the
  // partner of a fallback removal, so repaired low vertices stay repaired.
  std::vector<VertexId> high = filter(
      report.high_set_initial, [&](VertexId x) { return is_high(w.deg(x), n, k); });
  while (!high.empty()) {
    const auto in_high = membership(n, high);
    const auto x_set = filter(high, [&](VertexId x) {
      for (VertexId y : high) {
        if (y != x && w.adjacent(x, y)) return true;
      }
      return false;
    });
    VertexId u;
    VertexId v;
    if (!x_set.empty()) {
      u = argmin_degree(w, x_set);
      const auto y_set =
          filter(high, [&](VertexId y) { return y != u && w.adjacent(u, y); });
      v = argmin_degree(w, y_set);
    } else {
      u = argmin_degree(w, high);
      const auto y_set = filter(all, [&](VertexId y) {
        return !in_high[static_cast<std::size_t>(y)] &&
               !in_low_initial[static_cast<std::size_t>(y)] && w.adjacent(u, y) &&
               !pushed_out(y, w.deg(y) - 1);
      });
      if (y_set.empty()) {
        throw InfeasibleError(u, "high vertex " + std::to_string(u) +
                                     " has no admissible neighbour outside "
                                     "the high set and the initial low set");
      }
      v = argmax_degree(w, y_set);
    }
    w.remove(u, v);
    result.script.remove({u, v});
    ++report.removals;
    high = filter(high, [&](VertexId x) { return is_high(w.deg(x), n, k); });
  }

  result.graph = Graph::from_matrix(std::move(w.matrix));
  return result;
}

}  // namespace antires
