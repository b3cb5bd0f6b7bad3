#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "antires/antiresolving.hpp"
#include "antires/edit_script.hpp"
#include "antires/errors.hpp"
#include "antires/graph.hpp"

namespace antires {

// Greedy edge addition that lifts every 1-adjacency antiresolving set of size
// <= ell (the "bad" sets of the input graph) to a value >= 2 without letting a
// repaired set fall back to 1.

struct Candidate {
  Edge pair;  // canonical non-edge of the input graph
  int score = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// Non-edges with exactly one endpoint in at least one bad set, sorted by
// decreasing score, ties by pair.
struct CandidatePool {
  std::vector<Candidate> pairs;
};

CandidatePool candidate_pairs(const Graph& g, std::span<const ProbeSet> bad_sets);

// Number of (bad set S, orientation) incidences where one endpoint lies in S
// and the other is alone in its class with respect to S. Both orientations
// count.
int score_pair(const Graph& g, std::span<const ProbeSet> bad_sets, Edge pair);

struct GuardStats {
  std::uint64_t queries = 0;
  // Sum of |fixed| over all queries.
  std::uint64_t fixed_sets_seen = 0;
  // Fixed sets whose value was actually recomputed, with and without the
  // distance-2 filter. The unfiltered count is only collected in paranoid
  // mode or with pruning off.
  std::uint64_t evaluated_pruned = 0;
  std::uint64_t evaluated_full = 0;
  std::uint64_t disagreements = 0;
};

struct GreedyOptions {
  bool prune = true;
  // Run both guard variants on every query and throw PruneMismatchError if
  // they disagree.
  bool paranoid = false;
};

// The pruned and unpruned guard gave different answers.
class PruneMismatchError : public Error {
 public:
  PruneMismatchError(Edge pair, const std::string& what) : Error(what), pair_(pair) {}
  Edge pair() const { return pair_; }

 private:
  Edge pair_;
};

class GreedyState {
 public:
  GreedyState(const Graph& g, int ell, GreedyOptions options = {});

  const Graph& base_graph() const { return base_; }
  const AdjacencyMatrix& current() const { return current_; }
  Graph current_graph() const { return Graph::from_matrix(current_); }
  int ell() const { return ell_; }
  const GreedyOptions& options() const { return options_; }

  // The bad sets of the base graph, in (size, lexicographic) order.
  const std::vector<ProbeSet>& bad_sets() const { return bad_sets_; }
  std::vector<ProbeSet> bad_remaining() const;
  std::vector<ProbeSet> fixed() const;
  bool done() const { return remaining_count_ == 0; }

  const EditScript& script() const { return script_; }
  const GuardStats& stats() const { return stats_; }

  // True iff adding `pair` (a non-edge of the current graph) turns some fixed
  // set back into a 1-adjacency antiresolving set.
  bool breaks_fixed_sets(Edge pair);

  // Adds `pair` and moves sets that stopped being bad to the fixed side.
  void accept(Edge pair);

 private:
  bool guard(Edge pair, bool use_pruning);

  Graph base_;
  int ell_;
  GreedyOptions options_;
  AdjacencyMatrix current_;
  std::vector<ProbeSet> bad_sets_;
  std::vector<char> is_fixed_;  // parallel to bad_sets_
  std::size_t remaining_count_ = 0;
  EditScript script_;
  GuardStats stats_;
  KEvaluator eval_;
};

bool breaks_fixed_sets(GreedyState& state, Edge pair);

// No remaining candidate passes the guard while bad sets remain.
class StuckError : public Error {
 public:
  StuckError(std::vector<ProbeSet> residual, Graph partial, EditScript script,
             GuardStats stats, const std::string& what)
      : Error(what),
        residual_(std::move(residual)),
        partial_(std::move(partial)),
        script_(std::move(script)),
        stats_(stats) {}

  const std::vector<ProbeSet>& residual() const { return residual_; }
  const Graph& partial_graph() const { return partial_; }
  const EditScript& script() const { return script_; }
  const GuardStats& stats() const { return stats_; }

 private:
  std::vector<ProbeSet> residual_;
  Graph partial_;
  EditScript script_;
  GuardStats stats_;
};

struct TwoEllReport {
  int ell = 0;
  std::size_t bad_sets_initial = 0;
  std::size_t candidates_initial = 0;
  int additions = 0;
  GuardStats guard;
};

struct TwoEllResult {
  Graph graph;
  EditScript script;
  TwoEllReport report;
};

// Requires 1 <= ell < n. Throws StuckError when the candidate pool runs out.
TwoEllResult transform_2ell(const Graph& g, int ell, GreedyOptions options = {});

}  // namespace antires
