#include "antires/transform_2ell.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace antires {

namespace {

// Vertices outside S that sit alone in their class with respect to S.
std::vector<char> singleton_flags(const Graph& g, const ProbeSet& s) {
  std::vector<char> single(static_cast<std::size_t>(g.order()), 0);
  for (const auto& c : partition(g, s, Flavor::kAdjacency).classes) {
    if (c.members.size() == 1) single[static_cast<std::size_t>(c.members.front())] = 1;
  }
  return single;
}

// Vertices at distance <= 2 from u, as a bit row.
std::vector<std::uint64_t> ball2(const AdjacencyMatrix& m, VertexId u) {
  const auto row = m.row(u);
  std::vector<std::uint64_t> out(row.begin(), row.end());
  out[static_cast<std::size_t>(u >> 6)] |= std::uint64_t{1} << (u & 63);
  for (int w = 0; w < m.words_per_row(); ++w) {
    std::uint64_t bits = row[static_cast<std::size_t>(w)];
    while (bits != 0) {
      const VertexId x = w * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      const auto xr = m.row(x);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] |= xr[i];
    }
  }
  return out;
}

bool test_bit(const std::vector<std::uint64_t>& bits, VertexId v) {
  return (bits[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
}

}  // namespace

int score_pair(const Graph& g, std::span<const ProbeSet> bad_sets, Edge pair) {
  check_vertex(g, pair.u);
  check_vertex(g, pair.v);
  int score = 0;
  for (const ProbeSet& s : bad_sets) {
    const bool has_u = s.contains(pair.u);
    const bool has_v = s.contains(pair.v);
    if (has_u == has_v) continue;
    const auto single = singleton_flags(g, s);
    const VertexId outside = has_u ? pair.v : pair.u;
    if (single[static_cast<std::size_t>(outside)]) ++score;
  }
  return score;
}

CandidatePool candidate_pairs(const Graph& g, std::span<const ProbeSet> bad_sets) {
  const int n = g.order();
  std::map<Edge, int> scores;
  for (const ProbeSet& s : bad_sets) {
    const auto single = singleton_flags(g, s);
    // Every non-edge with exactly one endpoint in S qualifies; the score
    // counts those whose outside endpoint is alone in its class.
    for (VertexId in : s) {
      for (VertexId out = 0; out < n; ++out) {
        if (s.contains(out) || g.adjacent(in, out)) continue;
        scores[Edge{in, out}.canonical()] += single[static_cast<std::size_t>(out)];
      }
    }
  }
  CandidatePool pool;
  pool.pairs.reserve(scores.size());
  for (const auto& [pair, score] : scores) pool.pairs.push_back({pair, score});
  std::stable_sort(pool.pairs.begin(), pool.pairs.end(),
                   [](const Candidate& a, const Candidate& b) { return a.score > b.score; });
  return pool;
}

GreedyState::GreedyState(const Graph& g, int ell, GreedyOptions options)
    : base_(g),
      ell_(ell),
      options_(options),
      current_(g.matrix()),
      bad_sets_(enumerate_bad_sets(g, ell)),
      is_fixed_(bad_sets_.size(), 0),
      remaining_count_(bad_sets_.size()) {}

std::vector<ProbeSet> GreedyState::bad_remaining() const {
  std::vector<ProbeSet> out;
  for (std::size_t i = 0; i < bad_sets_.size(); ++i) {
    if (!is_fixed_[i]) out.push_back(bad_sets_[i]);
  }
  return out;
}

std::vector<ProbeSet> GreedyState::fixed() const {
  std::vector<ProbeSet> out;
  for (std::size_t i = 0; i < bad_sets_.size(); ++i) {
    if (is_fixed_[i]) out.push_back(bad_sets_[i]);
  }
  return out;
}

bool GreedyState::guard(Edge pair, bool use_pruning) {
  std::vector<std::uint64_t> near_u;
  std::vector<std::uint64_t> near_v;
  if (use_pruning) {
    near_u = ball2(current_, pair.u);
    near_v = ball2(current_, pair.v);
  }
  current_.set(pair.u, pair.v);
  bool breaks = false;
  for (std::size_t i = 0; i < bad_sets_.size() && !breaks; ++i) {
    if (!is_fixed_[i]) continue;
    const ProbeSet& s = bad_sets_[i];
    if (use_pruning) {
      const bool near = std::any_of(s.begin(), s.end(), [&](VertexId w) {
        return test_bit(near_u, w) || test_bit(near_v, w);
      });
      if (!near) continue;
      ++stats_.evaluated_pruned;
    } else {
      ++stats_.evaluated_full;
    }
    breaks = eval_.adjacency(current_, s.members()) == 1;
  }
  current_.reset(pair.u, pair.v);
  return breaks;
}

bool GreedyState::breaks_fixed_sets(Edge pair) {
  pair = pair.canonical();
  check_vertex(base_, pair.u);
  check_vertex(base_, pair.v);
  if (pair.u == pair.v || current_.test(pair.u, pair.v)) {
    throw PreconditionError("breaks_fixed_sets: (" + std::to_string(pair.u) +
                            "," + std::to_string(pair.v) +
                            ") is not a non-edge of the current graph");
  }
  ++stats_.queries;
  stats_.fixed_sets_seen += bad_sets_.size() - remaining_count_;
  if (!options_.prune) return guard(pair, false);
  const bool pruned = guard(pair, true);
  if (options_.paranoid) {
    const bool full = guard(pair, false);
    if (full != pruned) {
      ++stats_.disagreements;
      throw PruneMismatchError(
          pair, "pruned guard says " + std::string(pruned ? "breaks" : "safe") +
                    " but full guard says " + (full ? "breaks" : "safe") +
                    " for pair (" + std::to_string(pair.u) + "," +
                    std::to_string(pair.v) + ")");
    }
  }
  return pruned;
}

void GreedyState::accept(Edge pair) {
  pair = pair.canonical();
  if (pair.u == pair.v || current_.test(pair.u, pair.v)) {
    throw PreconditionError("accept: pair is not a non-edge of the current graph");
  }
  current_.set(pair.u, pair.v);
  script_.add(pair);
  for (std::size_t i = 0; i < bad_sets_.size(); ++i) {
    if (is_fixed_[i]) continue;
    if (eval_.adjacency(current_, bad_sets_[i].members()) >= 2) {
      is_fixed_[i] = 1;
      --remaining_count_;
    }
  }
}

bool breaks_fixed_sets(GreedyState& state, Edge pair) {
  return state.breaks_fixed_sets(pair);
}

TwoEllResult transform_2ell(const Graph& g, int ell, GreedyOptions options) {
  GreedyState state(g, ell, options);
  CandidatePool pool = candidate_pairs(g, state.bad_sets());

  TwoEllResult result;
  result.report.ell = ell;
  result.report.bad_sets_initial = state.bad_sets().size();
  result.report.candidates_initial = pool.pairs.size();

  while (!state.done()) {
    auto pick = pool.pairs.end();
    for (auto it = pool.pairs.begin(); it != pool.pairs.end(); ++it) {
      if (!state.breaks_fixed_sets(it->pair)) {
        pick = it;
        break;
      }
    }
    if (pick == pool.pairs.end()) {
      auto residual = state.bad_remaining();
      const std::size_t count = residual.size();
      throw StuckError(std::move(residual), state.current_graph(), state.script(),
                       state.stats(),
                       "no candidate edge passes the guard; " +
                           std::to_string(count) + " bad set(s) remain");
    }
    state.accept(pick->pair);
    pool.pairs.erase(pick);
  }

  result.graph = state.current_graph();
  result.script = state.script();
  result.report.additions = static_cast<int>(result.script.size());
  result.report.guard = state.stats();
  return result;
}

}  // namespace antires
