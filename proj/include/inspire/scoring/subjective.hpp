#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "inspire/core/types.hpp"
#include "inspire/gateways/gateway.hpp"

namespace inspire::scoring {

class JudgingError : public Error {
public:
    using Error::Error;
};

struct RoundJudgement {
    int round_index = 0;
    // Four subjective dimensions per side, normalized to [0,1].
    std::map<Role, std::map<DimensionId, double>> side_scores;
    std::string winner;  // parsed and stored, not used in scoring
    std::string rationale;
    std::vector<std::string> warnings;
};

std::string render_judge_system_prompt();
std::string render_judge_user_prompt(const DebateTranscript& t, int round_index);

// Judges one round's Pro and Con turns against the rubric. Scores on a 0-10
// scale (any score > 1) are divided by 10; a reported total that is not the
// sum of the four is recomputed with a warning. Malformed replies get one
// re-prompt, then JudgingError.
RoundJudgement judge_round(gateways::GatewayHub& hub, const DebateTranscript& t, int round_index,
                           const std::string& judge_engine);

// Eq.-style per-dimension mean over the side's judged rounds. A round's
// judging failure fails the whole side unless allow_partial, which averages
// over the rounds that were judged.
std::map<DimensionId, double> score_subjective(gateways::GatewayHub& hub,
                                               const DebateTranscript& t, Role side,
                                               const std::string& judge_engine,
                                               bool allow_partial = false,
                                               std::vector<RoundJudgement>* judgements_out = nullptr);

// Pure fold over prejudged rounds (exposed for tests and persistence).
std::map<DimensionId, double> mean_subjective(const std::vector<RoundJudgement>& judgements,
                                              Role side);

nlohmann::ordered_json judgement_to_json(const RoundJudgement& j);

}  // namespace inspire::scoring
