#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "antires/antiresolving.hpp"
#include "antires/edge_list.hpp"
#include "antires/fixtures.hpp"
#include "antires/generators.hpp"
#include "antires/transform_k1.hpp"
#include "oracle.hpp"

using namespace antires;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError for: " << text);
  throw;  // unreachable
}

}  // namespace

TEST_CASE("parse_edge_list examples") {
  const std::vector<Edge> p3{{0, 1}, {1, 2}};
  CHECK(parse_edge_list("n 3\n0 1\n1 2") == build_graph(3, p3));
  CHECK(parse_edge_list("n 5\n# no edges") == empty_graph(5));
  CHECK(parse_edge_list("# lead\n\n  n 4  \r\n# mid\n2\t3\n\n1 0\n# tail\n") ==
        build_graph(4, std::vector<Edge>{{0, 1}, {2, 3}}));
  CHECK(parse_edge_list("n 0\n") == empty_graph(0));

  const ParseError loop = parse_failure("n 2\n0 0");
  CHECK(loop.kind() == ParseErrorKind::kSelfLoop);
  CHECK(loop.line() == 2);
}

TEST_CASE("parse errors carry kind and line") {
  struct Case {
    const char* text;
    ParseErrorKind kind;
    int line;
  };
  const std::vector<Case> cases{
      {"", ParseErrorKind::kMissingHeader, 1},
      {"# only a comment\n", ParseErrorKind::kMissingHeader, 2},
      {"0 1\nn 2\n", ParseErrorKind::kMissingHeader, 1},
      {"n x\n", ParseErrorKind::kMalformedLine, 1},
      {"n -3\n", ParseErrorKind::kMalformedLine, 1},
      {"n 3\n0 1 2\n", ParseErrorKind::kMalformedLine, 2},
      {"n 3\n0\n", ParseErrorKind::kMalformedLine, 2},
      {"n 3\n0 a\n", ParseErrorKind::kMalformedLine, 2},
      {"n 3\n# c\n0 3\n", ParseErrorKind::kIdOutOfRange, 3},
      {"n 3\n\n\n2 2\n", ParseErrorKind::kSelfLoop, 4},
      {"n 3\n0 1\n1 0\n", ParseErrorKind::kDuplicateEdge, 3},
      {"n 3\n0 1\nn 3\n", ParseErrorKind::kMalformedLine, 3},
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    const ParseError e = parse_failure(c.text);
    CHECK(e.kind() == c.kind);
    CHECK(e.line() == c.line);
    CHECK(std::string(e.what()).rfind("line " + std::to_string(c.line) + ":", 0) == 0);
  }
}

TEST_CASE("serialize is canonical and round-trips") {
  CHECK(serialize_edge_list(parse_edge_list("n 4\n3 1\n0 2\n1 0\n")) == "n 4\n0 1\n0 2\n1 3\n");
  CHECK(serialize_edge_list(empty_graph(3)) == "n 3\n");

  std::uint64_t state = 5;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = oracle::uniform(state, 0, 90);
    const Graph g = oracle::random_graph(state, n, oracle::uniform(state, 0, 100) / 100.0);
    const std::string text = serialize_edge_list(g);
    REQUIRE(parse_edge_list(text) == g);
    REQUIRE(serialize_edge_list(parse_edge_list(text)) == text);
  }
  for (const auto& f : fixtures()) REQUIRE(parse_edge_list(serialize_edge_list(f.graph)) == f.graph);
}

TEST_CASE("file read and write") {
  const auto dir = std::filesystem::temp_directory_path() / "antires_test_io";
  std::filesystem::create_directories(dir);
  const auto path = dir / "g.txt";
  const Graph g = find_fixture("fig3")->graph;
  write_edge_list(path, g);
  CHECK(read_edge_list(path) == g);
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == serialize_edge_list(g));
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_edge_list(dir / "missing.txt"), Error);
  CHECK_THROWS_AS(write_edge_list(dir / "no" / "such" / "dir.txt", g), Error);
}

TEST_CASE("generate_erdos_renyi") {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    CHECK(generate_erdos_renyi(10, 0.0, seed) == empty_graph(10));
    CHECK(generate_erdos_renyi(10, 1.0, seed) == complete_graph(10));
  }
  // Frozen at first implementation.
  const Graph golden = generate_erdos_renyi(20, 0.2, 42);
  CHECK(golden.edge_count() == 33);
  const auto edges = golden.edges();
  REQUIRE(edges.size() >= 4);
  CHECK(edges[0] == Edge{0, 4});
  CHECK(edges[1] == Edge{0, 6});
  CHECK(edges[2] == Edge{0, 11});
  CHECK(edges[3] == Edge{0, 19});

  CHECK(generate_erdos_renyi(30, 0.4, 7) == generate_erdos_renyi(30, 0.4, 7));
  CHECK(generate_erdos_renyi(30, 0.4, 7) != generate_erdos_renyi(30, 0.4, 8));
  CHECK(generate_erdos_renyi(0, 0.5, 1) == empty_graph(0));
  CHECK_THROWS_AS(generate_erdos_renyi(5, 1.5, 1), PreconditionError);
  CHECK_THROWS_AS(generate_erdos_renyi(5, -0.1, 1), PreconditionError);

  // Edge density is close to p on a large draw.
  const Graph big = generate_erdos_renyi(200, 0.3, 11);
  const double density = static_cast<double>(big.edge_count()) / (200.0 * 199.0 / 2.0);
  CHECK(density == doctest::Approx(0.3).epsilon(0.05));
}

TEST_CASE("fixtures") {
  const auto f3 = *find_fixture("fig3");
  CHECK(f3.graph.order() == 11);
  const VertexId v = *f3.id_of("v");
  for (VertexId u = 0; u < 11; ++u) CHECK(f3.graph.degree(u) == (u == v ? 4 : 2));
  CHECK(antiresolving_k(f3.graph, ProbeSet{v}, Flavor::kMetric) == 2);
  CHECK(antiresolving_k(f3.graph, ProbeSet{v}, Flavor::kAdjacency) == 4);

  const auto g3 = *find_fixture("fig2_g3");
  CHECK(antiresolving_k(g3.graph, ProbeSet{*g3.id_of("v")}, Flavor::kMetric) == 1);
  CHECK(anonymity_value(g3.graph, 1, Flavor::kMetric).k < 2);

  const auto g1 = *find_fixture("fig2_g1");
  CHECK(anonymity_value(g1.graph, 1, Flavor::kMetric).k == 1);
  const auto g2 = *find_fixture("fig2_g2");
  CHECK(g2.graph.edge_count() == 5);
  CHECK(!g2.graph.adjacent(*g2.id_of("x2"), *g2.id_of("y2")));

  const auto f4a = *find_fixture("fig4a");
  CHECK(transform_k1(f4a.graph, 2).report.low_set_initial.size() == 4);
  CHECK(bounds_added(f4a.graph, 2) == EditBounds{2, 4});
  const auto f4b = *find_fixture("fig4b");
  CHECK(f4b.graph.order() == 6);
  CHECK(f4b.graph.edge_count() == 5);

  // Names are unique per fixture and the matching pairs shared names.
  for (const auto& f : fixtures()) {
    CHECK(static_cast<int>(f.vertex_names.size()) == f.graph.order());
    for (VertexId u = 0; u < f.graph.order(); ++u) CHECK(f.id_of(f.vertex_names[u]) == u);
  }
  const auto m = match_by_name(g1, g2);
  REQUIRE(m.size() == 1);
  CHECK(m[0].first == *g1.id_of("v"));
  CHECK(m[0].second == *g2.id_of("v"));
  CHECK(!find_fixture("nope"));
}
