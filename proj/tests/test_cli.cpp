#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "antires/antiresolving.hpp"
#include "antires/cli.hpp"
#include "antires/edge_list.hpp"
#include "antires/generators.hpp"
#include "antires/transform_k1.hpp"
#include "oracle.hpp"

using namespace antires;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;

  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "antires");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "antires_test_cli") {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& text = "") const {
    const auto p = path_ / name;
    if (!text.empty()) std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("analyze") {
  const Run r = run({"analyze", "--input", "fig3", "--ell", "1", "--mode", "adjacency"});
  REQUIRE(r.code == kExitOk);
  const json j = r.report();
  CHECK(j["schema"] == 1);
  CHECK(j["mode"] == "adjacency");
  CHECK(j["ell"] == 1);
  CHECK(j["k"] == 2);
  CHECK(j["witness"].size() == 1);
  CHECK(j.contains("sets_examined"));
  CHECK(j.contains("elapsed_ms"));

  const Run quiet = run({"--omit-timing", "analyze", "--input", "fig3", "--mode", "metric"});
  REQUIRE(quiet.code == kExitOk);
  CHECK_FALSE(quiet.report().contains("elapsed_ms"));
  CHECK(quiet.report()["k"] == 1);

  // Key order is fixed.
  const auto ordered = nlohmann::ordered_json::parse(quiet.out);
  std::vector<std::string> in_order;
  for (const auto& [key, value] : ordered.items()) in_order.push_back(key);
  CHECK(in_order == std::vector<std::string>{"schema", "mode", "ell", "k", "witness", "sets_examined"});
}

TEST_CASE("verify") {
  const Run ok = run({"verify", "--original", "fig2_g1", "--published", "fig2_g2", "--k", "2",
                      "--ell", "1", "--mode", "metric"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.report()["holds"] == true);
  CHECK(run({"verify", "--original", "fig2_g1", "--published", "fig2_g3", "--k", "2", "--ell",
             "1", "--mode", "metric"})
            .code == kExitOk);

  TempDir dir;
  const std::string p3 = dir.file("p3.txt", "n 3\n0 1\n1 2\n");
  const Run bad = run({"verify", "--original", p3, "--published", p3, "--k", "2", "--ell", "1"});
  CHECK(bad.code == kExitNotAnonymous);
  const json j = bad.report();
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"] == json::array({0}));
  CHECK(j["mode"] == "adjacency");
}

TEST_CASE("transform-k1") {
  const Run r = run({"transform-k1", "--input", "fig4a", "--k", "2"});
  REQUIRE(r.code == kExitOk);
  const json j = r.report();
  CHECK(j["status"] == "ok");
  CHECK(j["additions"] == 2);
  CHECK(j["removals"] == 0);
  CHECK(j["verification"]["holds"] == true);
  CHECK(j["loss"]["edge_edit_distance"] == 2);
  CHECK(j["script"].size() == 2);

  TempDir dir;
  const std::string in = dir.file("g.txt", serialize_edge_list(generate_erdos_renyi(20, 0.1, 3)));
  const std::string out = dir.file("out.txt");
  const std::string rep = dir.file("rep.json");
  const Graph g = read_edge_list(in);
  const int k = k1_value_formula(g) + 1;
  const Run w = run({"transform-k1", "--input", in, "--k", std::to_string(k), "--output", out,
                     "--report", rep});
  REQUIRE(w.code == kExitOk);
  CHECK(w.out.empty());
  CHECK(slurp(out) == serialize_edge_list(transform_k1(g, k).graph));
  CHECK(json::parse(slurp(rep))["status"] == "ok");

  // k already reached.
  const std::string c6 = dir.file("c6.txt", "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
  const Run pre = run({"transform-k1", "--input", c6, "--k", "2"});
  CHECK(pre.code == kExitError);
  CHECK(pre.err.find("error:") == 0);

  const std::string star = dir.file("star.txt", "n 5\n0 1\n0 2\n0 3\n");
  const std::string none = dir.file("none.txt");
  const Run inf = run({"transform-k1", "--input", star, "--k", "2", "--output", none});
  CHECK(inf.code == kExitStuck);
  CHECK(inf.report()["status"] == "infeasible");
  CHECK(inf.report()["vertex"] == 0);
  CHECK_FALSE(std::filesystem::exists(none));
}

TEST_CASE("transform-2ell") {
  TempDir dir;
  const std::string p3 = dir.file("p3.txt", "n 3\n0 1\n1 2\n");
  const std::string out = dir.file("out.txt");
  const Run r = run({"transform-2ell", "--input", p3, "--ell", "1", "--output", out, "--paranoid"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.report()["status"] == "ok");
  CHECK(r.report()["verification"]["holds"] == true);
  CHECK(slurp(out) == "n 3\n0 1\n0 2\n1 2\n");

  // Two-vertex probe sets on three vertices leave one vertex outside.
  const std::string out2 = dir.file("out2.txt");
  const Run s = run({"transform-2ell", "--input", p3, "--ell", "2", "--output", out2});
  CHECK(s.code == kExitStuck);
  const json j = s.report();
  CHECK(j["status"] == "stuck");
  CHECK_FALSE(j["residual"].empty());
  CHECK_FALSE(std::filesystem::exists(out2));

  CHECK(run({"transform-2ell", "--input", p3, "--ell", "3"}).code == kExitError);
}

TEST_CASE("gen and loss") {
  const Run g = run({"gen", "--n", "20", "--p", "0.2", "--seed", "42"});
  REQUIRE(g.code == kExitOk);
  CHECK(g.out == serialize_edge_list(generate_erdos_renyi(20, 0.2, 42)));

  TempDir dir;
  const std::string a = dir.file("a.txt", "n 3\n0 1\n1 2\n");
  const std::string b = dir.file("b.txt", "n 3\n0 1\n0 2\n1 2\n");
  const Run l = run({"loss", "--original", a, "--published", b});
  REQUIRE(l.code == kExitOk);
  const json j = l.report();
  CHECK(j["command"] == "loss");
  CHECK(j["edge_edit_distance"] == 1);
  CHECK(j["additions"] == 1);
  CHECK(j["removals"] == 0);
  CHECK(run({"loss", "--original", a, "--published", "fig3"}).code == kExitError);
}

TEST_CASE("errors and help") {
  TempDir dir;
  CHECK(run({}).code == kExitError);
  CHECK(run({"bogus"}).code == kExitError);
  CHECK(run({"analyze"}).code == kExitError);
  CHECK(run({"analyze", "--input", "no_such_thing"}).code == kExitError);
  CHECK(run({"analyze", "--input", "fig3", "--mode", "spectral"}).code == kExitError);
  CHECK(run({"analyze", "--input", "fig3", "--ell", "0"}).code == kExitError);
  CHECK(run({"--threads", "0", "analyze", "--input", "fig3"}).code == kExitError);
  CHECK(run({"gen", "--n", "5", "--p", "2"}).code == kExitError);
  const std::string broken = dir.file("broken.txt", "n 3\n0 1\n1 1\n");
  const Run p = run({"analyze", "--input", broken});
  CHECK(p.code == kExitError);
  CHECK(p.err.find("line 3") != std::string::npos);
  const Run h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("transform-2ell") != std::string::npos);
}

TEST_CASE("reports are byte-identical across reruns and thread counts") {
  const std::vector<std::vector<std::string>> commands{
      {"analyze", "--input", "fig3", "--ell", "2"},
      {"analyze", "--input", "fig4b", "--ell", "3", "--mode", "metric"},
      {"transform-k1", "--input", "fig4b", "--k", "2"},
      {"transform-2ell", "--input", "fig4a", "--ell", "1"},
      {"verify", "--original", "fig2_g1", "--published", "fig2_g3", "--k", "2", "--ell", "1"},
      {"gen", "--n", "40", "--p", "0.3", "--seed", "9"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> base{"--omit-timing"};
    base.insert(base.end(), cmd.begin(), cmd.end());
    const Run first = run(base);
    CAPTURE(first.out);
    for (const char* threads : {"1", "3"}) {
      std::vector<std::string> args{"--threads", threads};
      args.insert(args.end(), base.begin(), base.end());
      const Run again = run(args);
      CHECK(again.code == first.code);
      CHECK(again.out == first.out);
    }
  }

  ::setenv("ANTIRESOLVE_THREADS", "4", 1);
  const Run env = run({"--omit-timing", "analyze", "--input", "fig3", "--ell", "2"});
  ::unsetenv("ANTIRESOLVE_THREADS");
  CHECK(env.out == run({"--omit-timing", "analyze", "--input", "fig3", "--ell", "2"}).out);
  ::setenv("ANTIRESOLVE_THREADS", "0", 1);
  CHECK(run({"analyze", "--input", "fig3"}).code == kExitError);
  ::unsetenv("ANTIRESOLVE_THREADS");
}
