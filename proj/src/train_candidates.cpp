#include "inspire/train/candidates.hpp"

#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::train {

namespace {

std::string context_text(const std::vector<gateways::ChatMessage>& messages) {
    std::string out;
    for (const auto& m : messages) out += m.role + ":\n" + m.content + "\n\n";
    return out;
}

// Scores one candidate inside a single-round transcript whose opposite turn
// comes from the mainline self-debate.
std::optional<ScoreCard> score_candidate(gateways::GatewayHub& hub,
                                         const scoring::PipelineOptions& sopts, const Topic& topic,
                                         const std::string& engine, Role role,
                                         const std::string& candidate_text,
                                         const DebateTurn& mainline_opposite) {
    auto [reasoning, argument] = debate::parse_turn(candidate_text);
    if (util::trim(argument).empty()) return std::nullopt;

    DebateTurn candidate_turn;
    candidate_turn.round_index = 1;
    candidate_turn.role = role;
    candidate_turn.reasoning = reasoning;
    candidate_turn.argument = argument;

    DebateTurn opposite = mainline_opposite;
    opposite.round_index = 1;

    DebateTranscript mini;
    mini.topic = topic;
    mini.pro_engine = engine;
    mini.con_engine = engine;
    mini.rounds = 1;
    if (role == Role::Pro) mini.turns = {candidate_turn, opposite};
    else mini.turns = {opposite, candidate_turn};

    try {
        auto art = scoring::evaluate_transcript(hub, sopts, mini);
        return art.cards.at(role);
    } catch (const Error& e) {
        util::log_warn("candidate scoring failed: ", e.what());
        return std::nullopt;
    }
}

}  // namespace

std::vector<CandidateGroup> generate_candidate_groups(gateways::GatewayHub& hub,
                                                      const CandidateGenOptions& opts,
                                                      const std::vector<Topic>& topics) {
    if (opts.k < 2) throw ValidationError("candidate generation needs k >= 2");

    std::vector<CandidateGroup> groups;
    for (const Topic& raw : topics) {
        Topic topic = make_topic(raw.id, raw.statement);

        // Mainline self-debate, recording each turn's exact prompt context.
        struct TurnContext {
            Role role;
            std::vector<gateways::ChatMessage> messages;
            DebateTurn mainline_turn;
        };
        std::vector<TurnContext> contexts;
        std::string last_pro_argument, last_con_argument;
        try {
            for (int round = 1; round <= opts.rounds; ++round) {
                for (Role role : {Role::Pro, Role::Con}) {
                    bool opening = (round == 1 && role == Role::Pro);
                    const std::string& opponent =
                        role == Role::Pro ? last_con_argument : last_pro_argument;
                    std::string prompt =
                        opening ? debate::render_opening_prompt(topic, role, opts.prompts)
                                : debate::render_rebuttal_prompt(opponent, opts.prompts);
                    std::vector<gateways::ChatMessage> messages = {
                        {"system", debate::render_system_prompt(topic, opts.prompts)},
                        {"user", prompt}};

                    gateways::ChatRequest req;
                    req.engine = opts.debater_engine;
                    req.temperature = opts.debate_temperature;
                    req.max_tokens = opts.max_tokens;
                    req.messages = messages;
                    std::string completion = hub.chat(req);
                    auto [reasoning, argument] = debate::parse_turn(completion);

                    DebateTurn turn;
                    turn.round_index = round;
                    turn.role = role;
                    turn.reasoning = reasoning;
                    turn.argument = argument;
                    contexts.push_back(TurnContext{role, messages, turn});

                    if (role == Role::Pro) last_pro_argument = argument;
                    else last_con_argument = argument;
                }
            }
        } catch (const Error& e) {
            util::log_warn("self-debate failed for topic ", topic.id, ": ", e.what());
            continue;
        }

        // Each turn context becomes a candidate group; the candidate's round
        // is completed by the mainline turn on the other side of that round.
        for (size_t i = 0; i < contexts.size(); ++i) {
            const TurnContext& ctx = contexts[i];
            size_t opposite_index = (ctx.role == Role::Pro) ? i + 1 : i - 1;
            const DebateTurn& opposite = contexts[opposite_index].mainline_turn;

            CandidateGroup group;
            group.prompt_context = context_text(ctx.messages);
            bool aborted = false;
            for (int j = 0; j < opts.k; ++j) {
                gateways::ChatRequest req;
                req.engine = opts.debater_engine;
                req.temperature = opts.sample_temperature;
                req.max_tokens = opts.max_tokens;
                req.messages = ctx.messages;
                req.sample_tag = "cand-" + std::to_string(j);
                std::string text;
                try {
                    text = hub.chat(req);
                } catch (const Error& e) {
                    util::log_warn("candidate sampling aborted group: ", e.what());
                    aborted = true;
                    break;
                }
                ScoredCandidate cand;
                cand.text = text;
                cand.card = score_candidate(hub, opts.scoring, topic, opts.debater_engine,
                                            ctx.role, text, opposite);
                if (cand.card) group.candidates.push_back(std::move(cand));
                else util::log_warn("dropping unscorable candidate ", j, " for topic ", topic.id);
            }
            if (aborted || group.candidates.size() < 2) {
                util::log_warn("group for topic ", topic.id, " turn ", i + 1,
                               " skipped (fewer than 2 scored candidates)");
                continue;
            }
            groups.push_back(std::move(group));
        }
    }
    return groups;
}

}  // namespace inspire::train
