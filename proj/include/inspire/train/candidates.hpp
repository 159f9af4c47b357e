#pragma once

#include "inspire/debate/engine.hpp"
#include "inspire/scoring/pipeline.hpp"
#include "inspire/train/dpo.hpp"

namespace inspire::train {

struct CandidateGenOptions {
    std::string debater_engine;
    int k = 4;                        // candidates per prompt context
    double sample_temperature = 0.9;  // candidate sampling
    double debate_temperature = 0.7;  // mainline self-debate
    int rounds = 1;                   // self-debate length m
    int max_tokens = 1024;
    scoring::PipelineOptions scoring;
    debate::PromptSet prompts = debate::PromptSet::defaults();
};

// Self-debates each topic, then samples k candidate responses for every turn
// context and scores each candidate with the full pipeline (the candidate's
// round is completed by the mainline opposing turn). Candidates whose scoring
// fails are dropped; a group survives only with >= 2 scored candidates.
// Gateway failures abort the affected group only.
std::vector<CandidateGroup> generate_candidate_groups(gateways::GatewayHub& hub,
                                                      const CandidateGenOptions& opts,
                                                      const std::vector<Topic>& topics);

}  // namespace inspire::train
