#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "inspire/core/types.hpp"

namespace inspire::train {

struct ScoredCandidate {
    std::string text;
    std::optional<ScoreCard> card;
};

struct CandidateGroup {
    std::string prompt_context;  // byte-identical across the group's candidates
    std::vector<ScoredCandidate> candidates;
};

struct PreferencePair {
    std::string prompt;
    std::string chosen;
    std::string rejected;
    std::string dimension;  // "overall" or a DimensionId
    double margin = 0.0;    // score(chosen) - score(rejected), > epsilon
};

// One pair per group: argmax vs argmin under the reward selector (overall
// InspireScore by default, or a single dimension). Groups with max-min <=
// epsilon emit nothing; groups with < 2 candidates or any missing scorecard
// are skipped with a warning.
std::vector<PreferencePair> build_dpo_pairs(const std::vector<CandidateGroup>& groups,
                                            std::optional<DimensionId> reward_dimension,
                                            double epsilon);

// JSON-lines with a schema header line, then {"prompt","chosen","rejected"}.
void write_dpo_jsonl(const std::filesystem::path& path, const std::vector<PreferencePair>& pairs,
                     std::optional<DimensionId> reward_dimension, double epsilon);

}  // namespace inspire::train
