#include "antires/antiresolving.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "antires/errors.hpp"
#include "antires/subsets.hpp"

namespace antires {

namespace {

void check_probe(const Graph& g, const ProbeSet& s) {
  for (VertexId u : s) check_vertex(g, u);
  if (static_cast<int>(s.size()) >= g.order()) {
    throw PreconditionError("probe set covers every vertex; no vertex left to "
                            "represent");
  }
}

void check_ell(const Graph& g, int ell) {
  if (ell < 1 || ell >= g.order()) {
    throw PreconditionError("ell must satisfy 1 <= ell < n (ell=" +
                            std::to_string(ell) +
                            ", n=" + std::to_string(g.order()) + ")");
  }
}

int min_run(std::span<const std::uint64_t> sorted_keys) {
  int best = std::numeric_limits<int>::max();
  std::size_t i = 0;
  while (i < sorted_keys.size()) {
    std::size_t j = i + 1;
    while (j < sorted_keys.size() && sorted_keys[j] == sorted_keys[i]) ++j;
    best = std::min(best, static_cast<int>(j - i));
    if (best == 1) break;
    i = j;
  }
  return best;
}

// Minimum class size for keys of `width` words (or distances) per vertex.
template <class Word>
int min_run_wide(std::span<const Word> keys, std::size_t width,
                 std::vector<int>& order) {
  const std::size_t count = keys.size() / width;
  order.resize(count);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    return keys.subspan(static_cast<std::size_t>(i) * width, width);
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ka = key(a);
    const auto kb = key(b);
    return std::lexicographical_compare(ka.begin(), ka.end(), kb.begin(), kb.end());
  });
  int best = std::numeric_limits<int>::max();
  std::size_t i = 0;
  while (i < count) {
    std::size_t j = i + 1;
    while (j < count && std::ranges::equal(key(order[j]), key(order[i]))) ++j;
    best = std::min(best, static_cast<int>(j - i));
    if (best == 1) break;
    i = j;
  }
  return best;
}

}  // namespace

std::string_view to_string(Flavor f) {
  return f == Flavor::kMetric ? "metric" : "adjacency";
}

std::optional<Flavor> parse_flavor(std::string_view text) {
  if (text == "metric") return Flavor::kMetric;
  if (text == "adjacency") return Flavor::kAdjacency;
  return std::nullopt;
}

ProbeSet::ProbeSet(std::vector<VertexId> members) : members_(std::move(members)) {
  if (members_.empty()) throw PreconditionError("probe set must be non-empty");
  std::sort(members_.begin(), members_.end());
  if (members_.front() < 0) {
    throw PreconditionError("probe set holds a negative vertex id");
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionError("probe set holds a repeated vertex");
  }
}

bool ProbeSet::contains(VertexId u) const {
  return std::binary_search(members_.begin(), members_.end(), u);
}

std::strong_ordering operator<=>(const ProbeSet& a, const ProbeSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

std::optional<std::size_t> ClassPartition::class_of(VertexId u) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), u)) {
      return i;
    }
  }
  return std::nullopt;
}

Representation representation(const Graph& g, VertexId u, const ProbeSet& s,
                              Flavor flavor) {
  check_vertex(g, u);
  for (VertexId v : s) check_vertex(g, v);
  if (s.contains(u)) {
    throw PreconditionError("vertex " + std::to_string(u) +
                            " belongs to the probe set");
  }
  Representation r{flavor, {}};
  r.coords.reserve(s.size());
  if (flavor == Flavor::kAdjacency) {
    for (VertexId v : s) r.coords.push_back(g.adjacent(v, u) ? 1 : 2);
  } else {
    const auto from_u = bfs_distances(g, u);
    for (VertexId v : s) r.coords.push_back(from_u[static_cast<std::size_t>(v)]);
  }
  return r;
}

ClassPartition partition(const Graph& g, const ProbeSet& s, Flavor flavor) {
  check_probe(g, s);
  std::vector<std::vector<Distance>> columns;  // columns[i][x] = coord i of x
  columns.reserve(s.size());
  for (VertexId v : s) {
    if (flavor == Flavor::kMetric) {
      columns.push_back(bfs_distances(g, v));
    } else {
      std::vector<Distance> col(static_cast<std::size_t>(g.order()), 2);
      for (VertexId w : g.neighbours(v)) col[static_cast<std::size_t>(w)] = 1;
      columns.push_back(std::move(col));
    }
  }
  std::map<std::vector<Distance>, std::size_t> index;
  ClassPartition p{s, {}, 0};
  for (VertexId x = 0; x < g.order(); ++x) {
    if (s.contains(x)) continue;
    std::vector<Distance> coords;
    coords.reserve(s.size());
    for (const auto& col : columns) coords.push_back(col[static_cast<std::size_t>(x)]);
    auto [it, inserted] = index.try_emplace(coords, p.classes.size());
    if (inserted) p.classes.push_back({{flavor, std::move(coords)}, {}});
    p.classes[it->second].members.push_back(x);
  }
  p.k_value = std::numeric_limits<int>::max();
  for (const auto& c : p.classes) {
    p.k_value = std::min(p.k_value, static_cast<int>(c.members.size()));
  }
  return p;
}

int KEvaluator::adjacency(const AdjacencyMatrix& m, std::span<const VertexId> s) {
  const int n = m.order();
  in_probe_.assign(static_cast<std::size_t>(n), 0);
  for (VertexId v : s) in_probe_[static_cast<std::size_t>(v)] = 1;
  const std::size_t width = (s.size() + 63) / 64;
  keys_.assign(static_cast<std::size_t>(n - static_cast<int>(s.size())) * width, 0);
  std::size_t slot = 0;
  for (VertexId x = 0; x < n; ++x) {
    if (in_probe_[static_cast<std::size_t>(x)]) continue;
    std::uint64_t* key = keys_.data() + slot * width;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (m.test(s[i], x)) key[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    ++slot;
  }
  if (width == 1) {
    std::sort(keys_.begin(), keys_.end());
    return min_run(keys_);
  }
  return min_run_wide<std::uint64_t>(keys_, width, order_);
}

int KEvaluator::metric(const DistanceMatrix& d, std::span<const VertexId> s) {
  const int n = d.order();
  in_probe_.assign(static_cast<std::size_t>(n), 0);
  for (VertexId v : s) in_probe_[static_cast<std::size_t>(v)] = 1;
  wide_keys_.clear();
  wide_keys_.reserve(static_cast<std::size_t>(n) * s.size());
  for (VertexId x = 0; x < n; ++x) {
    if (in_probe_[static_cast<std::size_t>(x)]) continue;
    for (VertexId v : s) wide_keys_.push_back(d.at(v, x));
  }
  return min_run_wide<Distance>(wide_keys_, s.size(), order_);
}

int antiresolving_k(const Graph& g, const ProbeSet& s, Flavor flavor) {
  check_probe(g, s);
  KEvaluator eval;
  if (flavor == Flavor::kAdjacency) return eval.adjacency(g.matrix(), s.members());
  // Only the rows of probe members are needed; avoid the all-pairs matrix.
  std::vector<std::vector<Distance>> rows;
  int best = std::numeric_limits<int>::max();
  std::map<std::vector<Distance>, int> counts;
  for (VertexId v : s) rows.push_back(bfs_distances(g, v));
  for (VertexId x = 0; x < g.order(); ++x) {
    if (s.contains(x)) continue;
    std::vector<Distance> key;
    for (const auto& row : rows) key.push_back(row[static_cast<std::size_t>(x)]);
    ++counts[key];
  }
  for (const auto& [key, count] : counts) best = std::min(best, count);
  return best;
}

namespace {

std::vector<VertexId> all_vertices(int n) {
  std::vector<VertexId> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Evaluator factory for scan_minimum. The metric variant shares one distance
// matrix across workers (read-only).
template <class Transform>
auto k_scan_factory(const Graph& g, Flavor flavor, const DistanceMatrix* dist,
                    Transform transform) {
  return [&g, flavor, dist, transform]() {
    return [&g, flavor, dist, transform,
            eval = KEvaluator()](std::span<const VertexId> s) mutable {
      const int k = flavor == Flavor::kAdjacency ? eval.adjacency(g.matrix(), s)
                                                 : eval.metric(*dist, s);
      return transform(k);
    };
  };
}

}  // namespace

std::optional<Antidimension> antidimension(const Graph& g, int k, int max_size,
                                           Flavor flavor, int threads) {
  if (g.order() < 2) throw PreconditionError("antidimension needs n >= 2");
  if (max_size < 1 || max_size >= g.order()) {
    throw PreconditionError("antidimension: max_size must be in [1, n)");
  }
  if (k < 1) throw PreconditionError("antidimension: k must be positive");
  std::optional<DistanceMatrix> dist;
  if (flavor == Flavor::kMetric) dist.emplace(g);
  const auto universe = all_vertices(g.order());
  const auto result = scan_minimum(
      universe, max_size, threads, 0,
      k_scan_factory(g, flavor, dist ? &*dist : nullptr,
                     [k](int value) { return value == k ? 0 : 1; }));
  if (result.value != 0) return std::nullopt;
  return Antidimension{static_cast<int>(result.witness.size()),
                       ProbeSet(result.witness)};
}

std::optional<Antidimension> k_adjacency_antidimension(const Graph& g, int k,
                                                       int max_size) {
  return antidimension(g, k, max_size, Flavor::kAdjacency);
}

AnonymityReport anonymity_value(const Graph& g, int ell, Flavor flavor,
                                int threads) {
  check_ell(g, ell);
  const auto start = std::chrono::steady_clock::now();
  std::optional<DistanceMatrix> dist;
  if (flavor == Flavor::kMetric) dist.emplace(g);
  const auto universe = all_vertices(g.order());
  const auto result =
      scan_minimum(universe, ell, threads, 1,
                   k_scan_factory(g, flavor, dist ? &*dist : nullptr,
                                  [](int value) { return value; }));
  AnonymityReport report;
  report.ell = ell;
  report.mode = flavor;
  report.k = result.value;
  report.witness = ProbeSet(result.witness);
  report.sets_examined = result.examined;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<ProbeSet> enumerate_bad_sets(const Graph& g, int ell) {
  check_ell(g, ell);
  std::vector<ProbeSet> out;
  KEvaluator eval;
  const auto universe = all_vertices(g.order());
  for_each_subset(universe, ell, [&](std::span<const VertexId> s) {
    if (eval.adjacency(g.matrix(), s) == 1) {
      out.emplace_back(std::vector<VertexId>(s.begin(), s.end()));
    }
    return true;
  });
  return out;
}

VertexMatching shared_ids(const Graph& g1, const Graph& g2) {
  VertexMatching m;
  for (VertexId u = 0; u < std::min(g1.order(), g2.order()); ++u) m.emplace_back(u, u);
  return m;
}

TransformationCheck is_transformation(const Graph& g1, const Graph& g2, int k,
                                      int ell, Flavor flavor, int threads) {
  return is_transformation(g1, g2, shared_ids(g1, g2), k, ell, flavor, threads);
}

TransformationCheck is_transformation(const Graph& g1, const Graph& g2,
                                      const VertexMatching& shared, int k,
                                      int ell, Flavor flavor, int threads) {
  if (k < 1 || ell < 1) {
    throw PreconditionError("is_transformation: k and ell must be positive");
  }
  VertexMatching pairs = shared;
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    check_vertex(g1, pairs[i].first);
    check_vertex(g2, pairs[i].second);
    if (i > 0 && pairs[i].first == pairs[i - 1].first) {
      throw PreconditionError("vertex matching repeats a vertex of the first graph");
    }
  }
  {
    std::vector<VertexId> seconds;
    for (const auto& p : pairs) seconds.push_back(p.second);
    std::sort(seconds.begin(), seconds.end());
    if (std::adjacent_find(seconds.begin(), seconds.end()) != seconds.end()) {
      throw PreconditionError(
          "vertex matching repeats a vertex of the second graph");
    }
  }

  // A probe set must leave a vertex outside it in both graphs.
  const int max_size = std::min({ell, g1.order() - 1, g2.order() - 1});
  std::optional<DistanceMatrix> d1;
  std::optional<DistanceMatrix> d2;
  if (flavor == Flavor::kMetric) {
    d1.emplace(g1);
    d2.emplace(g2);
  }
  auto k_in = [flavor](KEvaluator& eval, const Graph& g, const DistanceMatrix* d,
                       std::span<const VertexId> s) {
    return flavor == Flavor::kAdjacency ? eval.adjacency(g.matrix(), s)
                                        : eval.metric(*d, s);
  };
  auto map_sets = [&pairs](std::span<const VertexId> s, std::vector<VertexId>& s1,
                           std::vector<VertexId>& s2) {
    s1.clear();
    s2.clear();
    for (VertexId i : s) {
      s1.push_back(pairs[static_cast<std::size_t>(i)].first);
      s2.push_back(pairs[static_cast<std::size_t>(i)].second);
    }
  };
  const DistanceMatrix* p1 = d1 ? &*d1 : nullptr;
  const DistanceMatrix* p2 = d2 ? &*d2 : nullptr;

  TransformationCheck check;
  if (max_size < 1) return check;
  const auto universe = all_vertices(static_cast<int>(pairs.size()));
  const auto result = scan_minimum(universe, max_size, threads, 0, [&]() {
    return [&, eval = KEvaluator(), s1 = std::vector<VertexId>(),
            s2 = std::vector<VertexId>()](std::span<const VertexId> s) mutable {
      map_sets(s, s1, s2);
      if (k_in(eval, g1, p1, s1) >= k) return 1;
      return k_in(eval, g2, p2, s2) >= k ? 1 : 0;
    };
  });
  if (result.value == 0) {
    std::vector<VertexId> s1;
    std::vector<VertexId> s2;
    map_sets(result.witness, s1, s2);
    KEvaluator eval;
    check.holds = false;
    check.k_original = k_in(eval, g1, p1, s1);
    check.k_published = k_in(eval, g2, p2, s2);
    check.counterexample = ProbeSet(s1);
  }
  return check;
}

int k1_value_formula(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw PreconditionError("k1_value_formula needs n >= 2");
  if (g.is_complete() || g.is_edgeless()) return n - 1;
  const VertexClassReport report = classify_vertices(g);
  if (report.isolated.empty() && report.dominant.empty()) {
    return std::min(report.min_degree, n - report.max_degree - 1);
  }
  const auto& excluded =
      report.dominant.empty() ? report.isolated : report.dominant;
  std::vector<VertexId> rest;
  for (VertexId u = 0; u < n; ++u) {
    if (!std::binary_search(excluded.begin(), excluded.end(), u)) rest.push_back(u);
  }
  const InducedSubgraph sub = induced_subgraph(g, rest);
  const VertexClassReport inner = classify_vertices(sub.graph);
  if (!report.dominant.empty()) {
    return std::min(report.min_degree,
                    static_cast<int>(rest.size()) - inner.max_degree - 1);
  }
  return std::min(inner.min_degree, n - report.max_degree - 1);
}

std::optional<int> k1_upper_bound(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("k1_upper_bound needs n >= 2");
  if (g.is_complete() || g.is_edgeless()) return std::nullopt;
  return (g.order() - 1) / 2;
}

}  // namespace antires
