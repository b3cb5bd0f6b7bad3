#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "antires/antiresolving.hpp"
#include "antires/fixtures.hpp"
#include "antires/loss.hpp"
#include "antires/transform_k1.hpp"
#include "oracle.hpp"

using namespace antires;

namespace {

Graph complement(const Graph& g) {
  std::vector<Edge> e;
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) e.push_back({u, v});
    }
  }
  return build_graph(g.order(), e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return build_graph(n, e);
}

bool in_window(int degree, int n, int k) {
  return degree == 0 || degree == n - 1 || (degree >= k && degree <= n - k - 1);
}

// Checks every documented property of one run and returns the result.
K1Result checked_run(const Graph& g, int k) {
  const K1Result r = transform_k1(g, k);
  const int n = g.order();
  REQUIRE(r.script.apply(g) == r.graph);
  REQUIRE(r.script.additions() == static_cast<std::size_t>(r.report.additions));
  REQUIRE(r.script.removals() == static_cast<std::size_t>(r.report.removals));
  for (VertexId u : r.report.low_set_initial) REQUIRE(in_window(r.graph.degree(u), n, k));
  for (VertexId u : r.report.high_set_initial) REQUIRE(in_window(r.graph.degree(u), n, k));
  REQUIRE(oracle::singleton_verifier(oracle::from(g), oracle::from(r.graph), k));
  const auto& b = r.report.bounds;
  REQUIRE(b.added == bounds_added(g, k));
  REQUIRE(b.added.lower <= r.report.additions);
  REQUIRE(r.report.additions <= b.added.upper);
  REQUIRE(b.removed.lower <= r.report.removals);
  REQUIRE(r.report.removals <= b.removed.upper);
  REQUIRE(compute_loss(g, r.graph).edge_edit_distance == r.script.size());
  return r;
}

}  // namespace

TEST_CASE("lower-bound instance: every added edge joins two low vertices") {
  const auto f = *find_fixture("fig4a");
  const K1Result r = checked_run(f.graph, 2);
  CHECK(r.report.additions == 2);
  CHECK(r.report.removals == 0);
  CHECK(r.report.bounds.added == EditBounds{2, 4});
  const auto low = r.report.low_set_initial;
  CHECK(low.size() == 4);
  for (const EditOp& op : r.script.ops()) {
    CHECK(op.kind == EditKind::kAdd);
    CHECK(std::count(low.begin(), low.end(), op.edge.u) == 1);
    CHECK(std::count(low.begin(), low.end(), op.edge.v) == 1);
  }
  for (VertexId u : low) CHECK(r.graph.degree(u) == 2);
  CHECK(r.graph.degree(*f.id_of("cv")) == 0);
  CHECK(r.script.ops()[0].edge == Edge{*f.id_of("v1"), *f.id_of("v2")});
  CHECK(r.script.ops()[1].edge == Edge{*f.id_of("v3"), *f.id_of("v4")});
}

TEST_CASE("upper-bound instance: low vertices are adjacent, so edges leave the low set") {
  const auto f = *find_fixture("fig4b");
  const K1Result r = checked_run(f.graph, 2);
  CHECK(r.report.additions == 2);
  CHECK(r.report.bounds.added == EditBounds{1, 2});
  const auto low = r.report.low_set_initial;
  CHECK(low == std::vector<VertexId>{*f.id_of("v12"), *f.id_of("v42")});
  for (const EditOp& op : r.script.ops()) {
    const int inside = static_cast<int>(std::count(low.begin(), low.end(), op.edge.u) +
                                        std::count(low.begin(), low.end(), op.edge.v));
    CHECK(inside == 1);
  }
  // The drawing's dashed edges.
  CHECK(r.script.ops()[0].edge == Edge{*f.id_of("v12"), *f.id_of("v22")});
  CHECK(r.script.ops()[1].edge == Edge{*f.id_of("v32"), *f.id_of("v42")});
}

TEST_CASE("removal bounds") {
  // Two degree-4 vertices on six vertices; everything else sits in [2, 3].
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                            {0, 2}, {0, 3}, {1, 4}, {1, 5}};
  const Graph g = build_graph(6, e);
  const K1Result r = checked_run(g, 2);
  CHECK(r.report.high_set_initial == std::vector<VertexId>{0, 1});
  CHECK(r.report.bounds.removed == EditBounds{1, 2});
  CHECK(r.report.removals == 1);
  CHECK(r.script.ops().front().edge == Edge{0, 1});

  // Complementing the lower-bound instance mirrors it.
  const Graph c = complement(find_fixture("fig4a")->graph);
  const K1Result rc = checked_run(c, 2);
  CHECK(rc.report.additions == 0);
  CHECK(rc.report.removals == 2);
  CHECK(rc.report.bounds.removed == EditBounds{2, 4});

  CHECK(bounds_removed(g, g, 1) == EditBounds{0, 0});
  CHECK(bounds_added(cycle(6), 2) == EditBounds{0, 0});
  CHECK_THROWS_AS(bounds_removed(g, cycle(5), 2), PreconditionError);
}

TEST_CASE("targets outside (k0, floor((n-1)/2)] are rejected") {
  // The 6-cycle already has k0 = 2.
  CHECK(k1_value_formula(cycle(6)) == 2);
  CHECK_THROWS_AS(transform_k1(cycle(6), 2), PreconditionError);
  CHECK_THROWS_AS(transform_k1(cycle(6), 3), PreconditionError);
  CHECK_THROWS_AS(transform_k1(find_fixture("fig4a")->graph, 1), PreconditionError);
  CHECK_THROWS_AS(transform_k1(find_fixture("fig4a")->graph, 3), PreconditionError);
  CHECK_THROWS_AS(transform_k1(complete_graph(7), 2), PreconditionError);
  CHECK_THROWS_AS(transform_k1(empty_graph(7), 2), PreconditionError);
}

TEST_CASE("infeasible fallbacks raise a structured error") {
  // Star on 0 with leaves 1..3 plus an isolated vertex: once the leaves are
  // repaired the centre's only neighbours are initial low vertices.
  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  try {
    transform_k1(build_graph(5, star), 2);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.vertex() == 0);
  }
  // Four disjoint edges plus an isolated vertex, k = 4: the degree window is
  // the single value 4 and the addition phase runs out of partners.
  const std::vector<Edge> matching{{0, 5}, {1, 4}, {3, 7}, {6, 8}};
  try {
    transform_k1(build_graph(9, matching), 4);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(build_graph(9, matching).degree(e.vertex()) == 1);
  }
}

TEST_CASE("random graphs: every target in range") {
  std::uint64_t state = 6060;
  int runs = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = oracle::uniform(state, 4, 40);
    const double p = oracle::uniform(state, 2, 95) / 100.0;
    const Graph g = oracle::random_graph(state, n, p);
    if (g.is_complete() || g.is_edgeless()) continue;
    const int k0 = k1_value_formula(g);
    for (int k = k0 + 1; k <= (n - 1) / 2; ++k) {
      try {
        const K1Result r = checked_run(g, k);
        REQUIRE(transform_k1(g, k).script == r.script);
        ++runs;
      } catch (const InfeasibleError& e) {
        REQUIRE(g.contains(e.vertex()));
        ++infeasible;
      }
    }
  }
  CHECK(runs > 100);
  CHECK(infeasible < runs / 5);
}
