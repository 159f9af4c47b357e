#include "inspire/core/types.hpp"

#include <cmath>

#include "inspire/util/strings.hpp"

namespace inspire {

Topic make_topic(std::string id, std::string statement) {
    if (util::trim(statement).empty())
        throw ValidationError("topic statement must be non-empty");
    return Topic{std::move(id), std::move(statement)};
}

const char* to_string(Role role) { return role == Role::Pro ? "pro" : "con"; }

Role role_from_string(const std::string& s) {
    std::string low = util::to_lower(util::trim(s));
    if (low == "pro" || low == "affirmative") return Role::Pro;
    if (low == "con" || low == "negative") return Role::Con;
    throw ValidationError("unknown role: " + s);
}

Role opponent(Role role) { return role == Role::Pro ? Role::Con : Role::Pro; }

const char* to_string(DimensionId dim) {
    switch (dim) {
        case DimensionId::EA: return "EA";
        case DimensionId::AC: return "AC";
        case DimensionId::AA: return "AA";
        case DimensionId::TR: return "TR";
        case DimensionId::FA: return "FA";
        case DimensionId::LV: return "LV";
    }
    return "?";
}

DimensionId dimension_from_string(const std::string& s) {
    std::string up;
    for (char c : util::trim(s)) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "EA") return DimensionId::EA;
    if (up == "AC") return DimensionId::AC;
    if (up == "AA" || up == "AR") return DimensionId::AA;
    if (up == "TR") return DimensionId::TR;
    if (up == "FA") return DimensionId::FA;
    if (up == "LV") return DimensionId::LV;
    throw ValidationError("unknown dimension: " + s);
}

std::string debate_id(const DebateTranscript& t) {
    return util::slugify(t.topic.id) + "__" + util::slugify(t.pro_engine) + "__" +
           util::slugify(t.con_engine);
}

std::vector<std::string> validate_transcript(const DebateTranscript& t) {
    std::vector<std::string> report;
    if (util::trim(t.topic.statement).empty()) report.push_back("topic statement empty");
    if (t.rounds < 1) report.push_back("rounds m < 1");
    if (static_cast<int>(t.turns.size()) != 2 * t.rounds) report.push_back("turn count != 2m");
    for (size_t i = 0; i < t.turns.size(); ++i) {
        const DebateTurn& turn = t.turns[i];
        Role expected = (i % 2 == 0) ? Role::Pro : Role::Con;
        int expected_round = static_cast<int>(i / 2) + 1;
        if (turn.role != expected)
            report.push_back("alternation violated at index " + std::to_string(i + 1));
        if (turn.round_index < 1)
            report.push_back("turn " + std::to_string(i + 1) + " round_index < 1");
        else if (turn.round_index != expected_round)
            report.push_back("turn " + std::to_string(i + 1) + " round_index != " +
                             std::to_string(expected_round));
        if (util::trim(turn.argument).empty())
            report.push_back("turn " + std::to_string(i + 1) + " argument empty");
    }
    return report;
}

ScoreCard aggregate_scorecard(const DimensionScores& scores) {
    for (DimensionId dim : kAllDimensions) {
        auto it = scores.find(dim);
        if (it == scores.end())
            throw IncompleteScorecardError(std::string("missing dimension ") + to_string(dim));
        double v = it->second;
        if (!(v >= 0.0 && v <= 1.0) || std::isnan(v))
            throw ScoreRangeError(std::string("score for ") + to_string(dim) +
                                  " out of [0,1]: " + std::to_string(v));
    }
    ScoreCard card;
    card.scores = scores;
    double subj = 0.0, obj = 0.0;
    for (DimensionId dim : kSubjectiveDimensions) subj += scores.at(dim);
    for (DimensionId dim : kObjectiveDimensions) obj += scores.at(dim);
    card.subjective_avg = subj / 4.0;
    card.objective_avg = obj / 2.0;
    card.overall = (subj + obj) / 6.0;
    return card;
}

}  // namespace inspire
