#pragma once

#include <json.hpp>

#include "inspire/core/types.hpp"

// Canonical JSON forms. Field order is fixed (ordered_json) so replayed runs
// produce byte-identical artifacts.

namespace inspire {

using Json = nlohmann::ordered_json;

Json topic_to_json(const Topic& topic);
Topic topic_from_json(const Json& j);

Json transcript_to_json(const DebateTranscript& t);
DebateTranscript transcript_from_json(const Json& j);

Json scorecard_to_json(const ScoreCard& card);
ScoreCard scorecard_from_json(const Json& j);

Json manifest_to_json(const RunManifest& m);

}  // namespace inspire
