#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inspire/core/errors.hpp"

namespace inspire {

struct Topic {
    std::string id;
    std::string statement;
};

// Throws ValidationError if the statement is empty after trimming.
Topic make_topic(std::string id, std::string statement);

enum class Role { Pro, Con };

const char* to_string(Role role);
Role role_from_string(const std::string& s);
Role opponent(Role role);

enum class DimensionId { EA, AC, AA, TR, FA, LV };

inline constexpr std::array<DimensionId, 6> kAllDimensions = {
    DimensionId::EA, DimensionId::AC, DimensionId::AA,
    DimensionId::TR, DimensionId::FA, DimensionId::LV};
inline constexpr std::array<DimensionId, 4> kSubjectiveDimensions = {
    DimensionId::EA, DimensionId::AC, DimensionId::AA, DimensionId::TR};
inline constexpr std::array<DimensionId, 2> kObjectiveDimensions = {
    DimensionId::FA, DimensionId::LV};

const char* to_string(DimensionId dim);
// Accepts the canonical ids plus "AR" as an alias for AA.
DimensionId dimension_from_string(const std::string& s);

struct DebateTurn {
    int round_index = 1;  // 1-based
    Role role = Role::Pro;
    std::string reasoning;  // may be empty
    std::string argument;
    std::vector<std::string> evidence;  // retrieved snippets, possibly empty
};

struct DebateTranscript {
    Topic topic;
    std::string pro_engine;
    std::string con_engine;
    int rounds = 0;  // m
    std::vector<DebateTurn> turns;
};

// Debate identifier used for artifact filenames: <topic-id>__<pro>__<con>.
std::string debate_id(const DebateTranscript& t);

// Empty report iff every transcript invariant holds; violations are data.
std::vector<std::string> validate_transcript(const DebateTranscript& t);

using DimensionScores = std::map<DimensionId, double>;

struct ScoreCard {
    DimensionScores scores;
    double subjective_avg = 0.0;
    double objective_avg = 0.0;
    double overall = 0.0;
};

// Requires all six dimensions, each in [0,1]. Full precision; rounding is a
// presentation concern only.
ScoreCard aggregate_scorecard(const DimensionScores& scores);

struct RunManifest {
    std::string run_id;
    std::vector<std::string> engine_ids;
    std::vector<std::string> topic_ids;
    std::string created_at;
    std::string finished_at;
};

}  // namespace inspire
