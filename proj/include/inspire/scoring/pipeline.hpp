#pragma once

#include <optional>
#include <set>

#include "inspire/scoring/facts.hpp"
#include "inspire/scoring/logic.hpp"
#include "inspire/scoring/subjective.hpp"

namespace inspire::scoring {

struct PipelineOptions {
    std::string judge_engine;
    std::string formalizer_engine;  // empty: same as judge
    VerifyMode logic_mode = VerifyMode::StrictEngine;
    bool allow_partial = false;
    int search_top_k = 5;
};

struct EvaluationArtifacts {
    std::vector<RoundJudgement> judgements;
    std::map<Role, std::vector<RoundFactReport>> fact_reports;
    std::map<Role, std::vector<FormalizedTurn>> logic_turns;
    std::map<Role, std::vector<std::vector<ConclusionVerdict>>> logic_verdicts;
    std::map<Role, DimensionScores> scores;               // the dimensions computed
    std::map<Role, std::optional<ScoreCard>> cards;       // set when all six present
};

// Scores the selected dimensions for both sides of a transcript. Subjective
// judging runs once per round and covers both sides; FA/LV run per side.
EvaluationArtifacts evaluate_transcript(gateways::GatewayHub& hub, const PipelineOptions& opts,
                                        const DebateTranscript& t,
                                        const std::set<DimensionId>& dims = {
                                            DimensionId::EA, DimensionId::AC, DimensionId::AA,
                                            DimensionId::TR, DimensionId::FA, DimensionId::LV});

}  // namespace inspire::scoring
