#include "inspire/scoring/subjective.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::scoring {

namespace {

const char* kJudgeSystemPrompt =
    "You are an experienced debate judge tasked with evaluating debates. For each debate, you "
    "will assess both sides based on four key criteria: Emotional Appeal, Argument Clarity, "
    "Argument Arrangement and Relevance to Debate Topic.\n"
    "For each of the four subdimensions, provide a score from 0 to 1 (with 0 being the lowest "
    "and 1 being the highest) for both the Pro (Affirmative) side and the Con (Negative) side. "
    "Additionally, provide a brief analysis for both sides for each subdimension.\n\n"
    "Scoring Criteria:\n\n"
    "1. Emotional Appeal: Evaluates whether the argument evokes a sense of approval or emotional "
    "resonance in the audience or judges, enhancing its persuasiveness.\n"
    "- 0: No emotional appeal. The argument feels cold or disconnected.\n"
    "- 1: Highly engaging emotionally, strongly connects with the audience.\n\n"
    "2. Argument Clarity: Assesses whether the argument is expressed in a way that is clear, "
    "concise, and easy for the audience or judges to understand.\n"
    "- 0: The arguments are unclear or confusing.\n"
    "- 1: The arguments are well-structured and easy to understand.\n\n"
    "3. Argument Arrangement: Evaluates whether the order and structure of the argument "
    "contribute to the presentation of the viewpoints.\n"
    "- 0: The arguments are disorganized and difficult to follow.\n"
    "- 1: The arguments follow a clear and logical progression.\n\n"
    "4. Relevance to Debate Topic: Determines whether the argument directly aligns with and "
    "addresses the debate topic, ensuring its pertinence.\n"
    "- 0: Arguments that stray far from the topic.\n"
    "- 1: Every argument is focused and relevant to the topic.\n\n"
    "After scoring each side on all four dimensions, calculate the total score for each side by "
    "summing the four subdimensional scores, then compare the totals to determine the winner. "
    "The side with the higher total wins.\n\n"
    "Please output the result in the following format:\n"
    "{'Pro (Affirmative Side) Score': {\n"
    "  'Emotional Appeal': '[score]',\n"
    "  'Argument Clarity': '[score]',\n"
    "  'Argument Arrangement': '[score]',\n"
    "  'Relevance to Debate Topic': '[score]',\n"
    "  'Total Score': '[total score]'},\n"
    "'Con (Negative Side) Score': {\n"
    "  'Emotional Appeal': '[score]',\n"
    "  'Argument Clarity': '[score]',\n"
    "  'Argument Arrangement': '[score]',\n"
    "  'Relevance to Debate Topic': '[score]',\n"
    "  'Total Score': '[total score]'},\n"
    "'Winner': '[Pro/Con]',\n"
    "'Reason': '[Provide detailed analysis based on the scores]'}";

std::string turn_text(const DebateTurn& turn) {
    if (turn.reasoning.empty()) return turn.argument;
    return turn.reasoning + "\n" + turn.argument;
}

std::optional<double> as_number(const nlohmann::json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            size_t used = 0;
            std::string s = inspire::util::trim(v.get<std::string>());
            double d = std::stod(s, &used);
            if (used > 0) return d;
        } catch (const std::exception&) {
        }
    }
    return std::nullopt;
}

const nlohmann::json* find_side_block(const nlohmann::json& root, const char* side_word) {
    // Exact skeleton key first, then any key that starts with the side word.
    std::string exact = std::string(side_word) == "Pro" ? "Pro (Affirmative Side) Score"
                                                        : "Con (Negative Side) Score";
    if (root.contains(exact) && root[exact].is_object()) return &root[exact];
    for (auto it = root.begin(); it != root.end(); ++it) {
        if (it.key().rfind(side_word, 0) == 0 && it.value().is_object()) return &it.value();
    }
    return nullptr;
}

std::optional<double> find_dimension(const nlohmann::json& block, DimensionId dim) {
    static const std::map<DimensionId, std::vector<std::string>> names = {
        {DimensionId::EA, {"Emotional Appeal"}},
        {DimensionId::AC, {"Argument Clarity"}},
        {DimensionId::AA, {"Argument Arrangement"}},
        {DimensionId::TR, {"Relevance to Debate Topic", "Topic Relevance"}},
    };
    for (const std::string& name : names.at(dim))
        if (block.contains(name))
            if (auto v = as_number(block[name])) return v;
    return std::nullopt;
}

struct ParsedReply {
    std::map<Role, std::map<DimensionId, double>> side_scores;
    std::map<Role, std::optional<double>> reported_totals;
    std::string winner;
    std::string rationale;
};

std::optional<ParsedReply> parse_judge_reply(const std::string& reply) {
    nlohmann::json root;
    try {
        root = gateways::extract_json(reply);
    } catch (const gateways::NoJsonFoundError&) {
        return std::nullopt;
    }
    if (!root.is_object()) return std::nullopt;

    ParsedReply out;
    for (auto [role, word] : {std::pair{Role::Pro, "Pro"}, std::pair{Role::Con, "Con"}}) {
        const nlohmann::json* block = find_side_block(root, word);
        if (!block) return std::nullopt;
        for (DimensionId dim : kSubjectiveDimensions) {
            auto v = find_dimension(*block, dim);
            if (!v) return std::nullopt;  // a missing dimension is a malformed reply
            out.side_scores[role][dim] = *v;
        }
        if (block->contains("Total Score")) out.reported_totals[role] = as_number((*block)["Total Score"]);
    }
    if (root.contains("Winner") && root["Winner"].is_string())
        out.winner = root["Winner"].get<std::string>();
    if (root.contains("Reason") && root["Reason"].is_string())
        out.rationale = root["Reason"].get<std::string>();
    return out;
}

}  // namespace

std::string render_judge_system_prompt() { return kJudgeSystemPrompt; }

std::string render_judge_user_prompt(const DebateTranscript& t, int round_index) {
    const DebateTurn& pro = t.turns[static_cast<size_t>(2 * (round_index - 1))];
    const DebateTurn& con = t.turns[static_cast<size_t>(2 * (round_index - 1) + 1)];
    std::ostringstream os;
    os << "Debate Topic: " << t.topic.statement << "\n"
       << "Round " << round_index << " of " << t.rounds << ".\n\n"
       << "Pro (Affirmative) side, round " << round_index << ":\n" << turn_text(pro) << "\n\n"
       << "Con (Negative) side, round " << round_index << ":\n" << turn_text(con) << "\n\n"
       << "Evaluate both sides of this round against the scoring criteria and output the result "
          "in the specified format.";
    return os.str();
}

RoundJudgement judge_round(gateways::GatewayHub& hub, const DebateTranscript& t, int round_index,
                           const std::string& judge_engine) {
    if (round_index < 1 || round_index > t.rounds)
        throw ValidationError("round_index out of range: " + std::to_string(round_index));
    if (static_cast<size_t>(2 * round_index) > t.turns.size())
        throw ValidationError("transcript is missing turns for round " +
                              std::to_string(round_index));

    gateways::ChatRequest req;
    req.engine = judge_engine;
    req.temperature = 0.0;
    req.max_tokens = 1024;
    req.messages = {{"system", kJudgeSystemPrompt},
                    {"user", render_judge_user_prompt(t, round_index)}};

    auto parsed = parse_judge_reply(hub.chat(req));
    if (!parsed) {
        gateways::ChatRequest retry = req;
        retry.sample_tag = "judge-retry";
        retry.messages.push_back(
            {"user",
             "Your previous reply was not the required JSON. Output only the JSON object in the "
             "specified format, including all four criteria for both sides."});
        parsed = parse_judge_reply(hub.chat(retry));
        if (!parsed)
            throw JudgingError("judge reply unparseable after re-prompt (round " +
                               std::to_string(round_index) + ")");
    }

    RoundJudgement j;
    j.round_index = round_index;
    j.winner = parsed->winner;
    j.rationale = parsed->rationale;

    // Scale detection: any dimension score > 1 means the judge used 0-10.
    bool ten_scale = false;
    for (const auto& [role, dims] : parsed->side_scores)
        for (const auto& [dim, v] : dims)
            if (v > 1.0) ten_scale = true;
    for (auto [role, word] : {std::pair{Role::Pro, "Pro"}, std::pair{Role::Con, "Con"}}) {
        double sum = 0.0;
        for (DimensionId dim : kSubjectiveDimensions) {
            double v = parsed->side_scores[role][dim];
            if (ten_scale) v /= 10.0;
            v = std::clamp(v, 0.0, 1.0);
            j.side_scores[role][dim] = v;
            sum += v;
        }
        auto reported = parsed->reported_totals[role];
        if (reported) {
            double rep = ten_scale ? *reported / 10.0 : *reported;
            if (std::abs(rep - sum) > 0.01) {
                j.warnings.push_back(std::string(word) + " Total Score " +
                                     util::format_fixed(rep, 3) + " != sum of four " +
                                     util::format_fixed(sum, 3) + "; recomputed");
                util::log_warn("judge round ", round_index, ": ", j.warnings.back());
            }
        }
    }
    return j;
}

std::map<DimensionId, double> mean_subjective(const std::vector<RoundJudgement>& judgements,
                                              Role side) {
    if (judgements.empty()) throw JudgingError("no judged rounds to average");
    std::map<DimensionId, double> out;
    for (DimensionId dim : kSubjectiveDimensions) {
        double sum = 0.0;
        for (const RoundJudgement& j : judgements) sum += j.side_scores.at(side).at(dim);
        double v = sum / static_cast<double>(judgements.size());
        out[dim] = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

std::map<DimensionId, double> score_subjective(gateways::GatewayHub& hub,
                                               const DebateTranscript& t, Role side,
                                               const std::string& judge_engine, bool allow_partial,
                                               std::vector<RoundJudgement>* judgements_out) {
    std::vector<RoundJudgement> judgements;
    for (int round = 1; round <= t.rounds; ++round) {
        try {
            judgements.push_back(judge_round(hub, t, round, judge_engine));
        } catch (const JudgingError& e) {
            if (!allow_partial) throw;
            util::log_warn("allow-partial: skipping round ", round, ": ", e.what());
        }
    }
    if (judgements_out) *judgements_out = judgements;
    return mean_subjective(judgements, side);
}

nlohmann::ordered_json judgement_to_json(const RoundJudgement& j) {
    nlohmann::ordered_json sides;
    for (Role role : {Role::Pro, Role::Con}) {
        nlohmann::ordered_json dims;
        for (DimensionId dim : kSubjectiveDimensions)
            dims[to_string(dim)] = j.side_scores.at(role).at(dim);
        sides[to_string(role)] = dims;
    }
    return nlohmann::ordered_json{{"schema", "inspire/round-judgement/v1"},
                                  {"round", j.round_index},
                                  {"sides", sides},
                                  {"winner", j.winner},
                                  {"rationale", j.rationale},
                                  {"warnings", j.warnings}};
}

}  // namespace inspire::scoring
