#include "antires/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "antires/antiresolving.hpp"
#include "antires/edge_list.hpp"
#include "antires/errors.hpp"
#include "antires/fixtures.hpp"
#include "antires/generators.hpp"
#include "antires/loss.hpp"
#include "antires/report_json.hpp"
#include "antires/transform_2ell.hpp"
#include "antires/transform_k1.hpp"

namespace antires {

namespace {

struct Input {
  Graph graph;
  std::optional<NamedGraph> fixture;
};

// A path that exists wins over a fixture of the same name.
Input load_input(const std::string& where) {
  if (std::filesystem::exists(where)) return {read_edge_list(where), std::nullopt};
  if (auto f = find_fixture(where)) {
    Graph g = f->graph;
    return {std::move(g), std::move(f)};
  }
  throw Error("no such file or fixture: " + where);
}

VertexMatching matching_for(const Input& a, const Input& b) {
  if (a.fixture && b.fixture) return match_by_name(*a.fixture, *b.fixture);
  return shared_ids(a.graph, b.graph);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot write " + path);
  f << text;
  if (!f) throw Error("failed writing " + path);
}

// The report goes to `path` when given, otherwise to `out`.
void emit(const Json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

Flavor flavor_or_throw(const std::string& text) {
  const auto f = parse_flavor(text);
  if (!f) throw PreconditionError("unknown mode '" + text + "'");
  return *f;
}

Json header(const char* command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

void append(Json& into, const Json& fields) {
  for (const auto& [key, value] : fields.items()) into[key] = value;
}

struct Common {
  int threads = 1;
  bool omit_timing = false;
};

struct AnalyzeArgs {
  std::string input;
  int ell = 1;
  std::string mode = "adjacency";
};

struct K1Args {
  std::string input;
  int k = 0;
  std::string output;
  std::string report;
};

struct TwoEllArgs {
  std::string input;
  int ell = 0;
  bool no_prune = false;
  bool paranoid = false;
  std::string output;
  std::string report;
};

struct VerifyArgs {
  std::string original;
  std::string published;
  int k = 0;
  int ell = 0;
  std::string mode = "adjacency";
};

struct GenArgs {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string output;
};

struct LossArgs {
  std::string original;
  std::string published;
};

int run_analyze(const AnalyzeArgs& a, const Common& c, std::ostream& out) {
  const Input in = load_input(a.input);
  const auto report =
      anonymity_value(in.graph, a.ell, flavor_or_throw(a.mode), c.threads);
  out << anonymity_json(report, !c.omit_timing).dump(2) << "\n";
  return kExitOk;
}

int run_transform_k1(const K1Args& a, const Common& c, std::ostream& out,
                     std::ostream& err) {
  const Input in = load_input(a.input);
  K1Result result = [&] {
    try {
      return transform_k1(in.graph, a.k);
    } catch (const InfeasibleError& e) {
      Json j = header("transform-k1");
      j["status"] = "infeasible";
      j["vertex"] = e.vertex();
      j["message"] = e.what();
      emit(j, a.report, out);
      throw;
    }
  }();
  const auto check = is_transformation(in.graph, result.graph, a.k, 1,
                                       Flavor::kAdjacency, c.threads);
  Json j = header("transform-k1");
  j["status"] = check.holds ? "ok" : "verification_failed";
  append(j, to_json(result.report));
  j["script"] = to_json(result.script);
  j["loss"] = to_json(compute_loss(in.graph, result.graph));
  j["verification"] = to_json(check);
  emit(j, a.report, out);
  if (!check.holds) {
    err << "transform-k1: output failed verification\n";
    return kExitNotAnonymous;
  }
  if (!a.output.empty()) write_edge_list(a.output, result.graph);
  return kExitOk;
}

int run_transform_2ell(const TwoEllArgs& a, const Common& c, std::ostream& out,
                       std::ostream& err) {
  const Input in = load_input(a.input);
  GreedyOptions options;
  options.prune = !a.no_prune;
  options.paranoid = a.paranoid;
  TwoEllResult result = [&] {
    try {
      return transform_2ell(in.graph, a.ell, options);
    } catch (const StuckError& e) {
      Json j = header("transform-2ell");
      j["status"] = "stuck";
      j["ell"] = a.ell;
      Json residual = Json::array();
      for (const ProbeSet& s : e.residual()) residual.push_back(to_json(s));
      j["residual"] = std::move(residual);
      j["script"] = to_json(e.script());
      j["guard"] = to_json(e.stats());
      emit(j, a.report, out);
      throw;
    }
  }();
  const auto check = is_transformation(in.graph, result.graph, 2, a.ell,
                                       Flavor::kAdjacency, c.threads);
  Json j = header("transform-2ell");
  j["status"] = check.holds ? "ok" : "verification_failed";
  append(j, to_json(result.report));
  j["script"] = to_json(result.script);
  j["loss"] = to_json(compute_loss(in.graph, result.graph));
  j["verification"] = to_json(check);
  emit(j, a.report, out);
  if (!check.holds) {
    err << "transform-2ell: output failed verification\n";
    return kExitNotAnonymous;
  }
  if (!a.output.empty()) write_edge_list(a.output, result.graph);
  return kExitOk;
}

int run_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  const Input g1 = load_input(a.original);
  const Input g2 = load_input(a.published);
  const Flavor flavor = flavor_or_throw(a.mode);
  const auto check = is_transformation(g1.graph, g2.graph, matching_for(g1, g2),
                                       a.k, a.ell, flavor, c.threads);
  Json j = header("verify");
  j["mode"] = std::string(to_string(flavor));
  j["k"] = a.k;
  j["ell"] = a.ell;
  append(j, to_json(check));
  out << j.dump(2) << "\n";
  return check.holds ? kExitOk : kExitNotAnonymous;
}

int run_gen(const GenArgs& a, std::ostream& out) {
  const Graph g = generate_erdos_renyi(a.n, a.p, a.seed);
  if (a.output.empty()) {
    out << serialize_edge_list(g);
  } else {
    write_edge_list(a.output, g);
  }
  return kExitOk;
}

int run_loss(const LossArgs& a, std::ostream& out) {
  const Input g1 = load_input(a.original);
  const Input g2 = load_input(a.published);
  Json j = header("loss");
  append(j, to_json(compute_loss(g1.graph, g2.graph)));
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anonymity analysis and edge-editing transformations for graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  auto* threads_opt =
      app.add_option("--threads", common.threads,
                     "Worker threads for subset scans (fallback: ANTIRESOLVE_THREADS)")
          ->check(CLI::PositiveNumber);
  app.add_flag("--omit-timing", common.omit_timing,
               "Leave wall-clock fields out of reports");

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Compute the (k, ell)-anonymity value");
  cmd_analyze->add_option("--input", analyze.input, "Edge-list path or fixture name")
      ->required();
  cmd_analyze->add_option("--ell", analyze.ell, "Largest probe set size")
      ->check(CLI::PositiveNumber);
  cmd_analyze->add_option("--mode", analyze.mode, "metric or adjacency")
      ->check(CLI::IsMember({"metric", "adjacency"}));

  K1Args k1;
  auto* cmd_k1 = app.add_subcommand("transform-k1",
                                    "Edit edges towards (k,1)-adjacency anonymity");
  cmd_k1->add_option("--input", k1.input, "Edge-list path or fixture name")->required();
  cmd_k1->add_option("--k", k1.k, "Target k")->required()->check(CLI::PositiveNumber);
  cmd_k1->add_option("--output", k1.output, "Where to write the edited graph");
  cmd_k1->add_option("--report", k1.report, "Where to write the JSON report");

  TwoEllArgs two;
  auto* cmd_2ell = app.add_subcommand("transform-2ell",
                                      "Add edges towards (2,ell)-adjacency anonymity");
  cmd_2ell->add_option("--input", two.input, "Edge-list path or fixture name")->required();
  cmd_2ell->add_option("--ell", two.ell, "Largest probe set size")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_2ell->add_flag("--no-prune", two.no_prune, "Re-check every fixed set");
  cmd_2ell->add_flag("--paranoid", two.paranoid,
                     "Cross-check pruned and unpruned guards");
  cmd_2ell->add_option("--output", two.output, "Where to write the edited graph");
  cmd_2ell->add_option("--report", two.report, "Where to write the JSON report");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Check that a published graph is a (k, ell)-anonymous transformation");
  cmd_verify->add_option("--original", verify.original, "Original graph")->required();
  cmd_verify->add_option("--published", verify.published, "Published graph")->required();
  cmd_verify->add_option("--k", verify.k, "Target k")->required()->check(CLI::PositiveNumber);
  cmd_verify->add_option("--ell", verify.ell, "Largest probe set size")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--mode", verify.mode, "metric or adjacency")
      ->check(CLI::IsMember({"metric", "adjacency"}));

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate an Erdos-Renyi graph");
  cmd_gen->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  cmd_gen->add_option("--p", gen.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  cmd_gen->add_option("--seed", gen.seed, "Generator seed");
  cmd_gen->add_option("--output", gen.output, "Where to write the edge list");

  LossArgs loss;
  auto* cmd_loss = app.add_subcommand("loss", "Compare an original and a published graph");
  cmd_loss->add_option("--original", loss.original, "Original graph")->required();
  cmd_loss->add_option("--published", loss.published, "Published graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (threads_opt->count() == 0) {
    if (const char* env = std::getenv("ANTIRESOLVE_THREADS"); env && *env) {
      const std::string_view text(env);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        err << "error: ANTIRESOLVE_THREADS must be a positive integer, got '" << text << "'\n";
        return kExitError;
      }
      common.threads = value;
    }
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(analyze, common, out);
    if (cmd_k1->parsed()) return run_transform_k1(k1, common, out, err);
    if (cmd_2ell->parsed()) return run_transform_2ell(two, common, out, err);
    if (cmd_verify->parsed()) return run_verify(verify, common, out);
    if (cmd_gen->parsed()) return run_gen(gen, out);
    if (cmd_loss->parsed()) return run_loss(loss, out);
  } catch (const StuckError& e) {
    err << "stuck: " << e.what() << "\n";
    return kExitStuck;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kExitStuck;
  } catch (const PruneMismatchError& e) {
    err << "pruning mismatch: " << e.what() << "\n";
    return kExitStuck;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace antires
