#pragma once

#include <json.hpp>

#include "antires/antiresolving.hpp"
#include "antires/edit_script.hpp"
#include "antires/loss.hpp"
#include "antires/transform_2ell.hpp"
#include "antires/transform_k1.hpp"

namespace antires {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const ProbeSet& s);
Json to_json(const EditScript& script);
Json to_json(const LossReport& loss);
Json to_json(const K1Report& report);
Json to_json(const GuardStats& stats);
Json to_json(const TwoEllReport& report);
Json to_json(const TransformationCheck& check);

// {schema, mode, ell, k, witness, sets_examined, elapsed_ms}; elapsed_ms is
// left out when `with_timing` is false.
Json anonymity_json(const AnonymityReport& report, bool with_timing);

}  // namespace antires
