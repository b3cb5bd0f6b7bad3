#include "antires/report_json.hpp"

namespace antires {

namespace {

Json bounds_json(const EditBounds& b) {
  Json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  return j;
}

}  // namespace

Json to_json(const ProbeSet& s) {
  Json j = Json::array();
  for (VertexId u : s) j.push_back(u);
  return j;
}

Json to_json(const EditScript& script) {
  Json j = Json::array();
  for (const EditOp& op : script.ops()) {
    Json e;
    e["op"] = op.kind == EditKind::kAdd ? "add" : "remove";
    e["u"] = op.edge.u;
    e["v"] = op.edge.v;
    j.push_back(std::move(e));
  }
  return j;
}

Json to_json(const LossReport& loss) {
  Json j;
  j["edge_edit_distance"] = loss.edge_edit_distance;
  j["additions"] = loss.additions;
  j["removals"] = loss.removals;
  j["degree_shift"] = loss.degree_shift;
  j["density_delta"] = loss.density_delta;
  return j;
}

Json to_json(const K1Report& report) {
  Json j;
  j["k0"] = report.k0;
  j["k"] = report.k;
  j["low_set_initial"] = report.low_set_initial;
  j["high_set_initial"] = report.high_set_initial;
  j["additions"] = report.additions;
  j["removals"] = report.removals;
  Json b;
  b["missing_initial"] = report.bounds.missing_initial;
  b["added"] = bounds_json(report.bounds.added);
  b["excess_after_additions"] = report.bounds.excess_at_gt;
  b["removed"] = bounds_json(report.bounds.removed);
  j["bounds"] = std::move(b);
  return j;
}

Json to_json(const GuardStats& stats) {
  Json j;
  j["queries"] = stats.queries;
  j["fixed_sets_seen"] = stats.fixed_sets_seen;
  j["evaluated_pruned"] = stats.evaluated_pruned;
  j["evaluated_full"] = stats.evaluated_full;
  j["disagreements"] = stats.disagreements;
  return j;
}

Json to_json(const TwoEllReport& report) {
  Json j;
  j["ell"] = report.ell;
  j["bad_sets_initial"] = report.bad_sets_initial;
  j["candidates_initial"] = report.candidates_initial;
  j["additions"] = report.additions;
  j["guard"] = to_json(report.guard);
  return j;
}

Json to_json(const TransformationCheck& check) {
  Json j;
  j["holds"] = check.holds;
  if (check.counterexample) {
    j["counterexample"] = to_json(*check.counterexample);
    j["k_original"] = check.k_original;
    j["k_published"] = check.k_published;
  }
  return j;
}

Json anonymity_json(const AnonymityReport& report, bool with_timing) {
  Json j;
  j["schema"] = kReportSchema;
  j["mode"] = std::string(to_string(report.mode));
  j["ell"] = report.ell;
  j["k"] = report.k;
  j["witness"] = to_json(report.witness);
  j["sets_examined"] = report.sets_examined;
  if (with_timing) {
    j["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return j;
}

}  // namespace antires
