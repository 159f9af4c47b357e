#include "inspire/debate/engine.hpp"

#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::debate {

namespace {

std::vector<gateways::SearchResult> retrieve_evidence(gateways::GatewayHub& hub,
                                                      const DebatePlan& plan, Role role,
                                                      const std::optional<std::string>& opponent) {
    const std::string& engine = role == Role::Pro ? plan.pro_engine : plan.con_engine;
    try {
        std::vector<std::string> keywords =
            extract_keywords(hub, engine, plan.topic, role, opponent, plan.prompts);
        std::string query = util::join(keywords, " ");
        if (query.size() > 2048) query = query.substr(0, 2048);
        return hub.search(query, plan.evidence.max_snippets);
    } catch (const Error& e) {
        util::log_warn("web-rag degraded for ", to_string(role), " turn: ", e.what());
        return {};
    }
}

}  // namespace

DebateTranscript run_debate(gateways::GatewayHub& hub, const DebatePlan& plan) {
    if (plan.rounds < 1) throw ValidationError("debate plan needs rounds >= 1");
    if (plan.web_rag && (plan.evidence.max_snippets <= 0 || plan.evidence.max_chars <= 0))
        throw ValidationError("web_rag requires a positive evidence budget");
    Topic topic = make_topic(plan.topic.id, plan.topic.statement);

    DebateTranscript t;
    t.topic = topic;
    t.pro_engine = plan.pro_engine;
    t.con_engine = plan.con_engine;
    t.rounds = plan.rounds;

    std::string last_pro_argument;
    std::string last_con_argument;

    for (int round = 1; round <= plan.rounds; ++round) {
        for (Role role : {Role::Pro, Role::Con}) {
            bool opening = (round == 1 && role == Role::Pro);
            const std::string& opponent_argument =
                role == Role::Pro ? last_con_argument : last_pro_argument;

            std::string prompt =
                opening ? render_opening_prompt(topic, role, plan.prompts)
                        : render_rebuttal_prompt(opponent_argument, plan.prompts);

            std::vector<gateways::SearchResult> evidence;
            if (plan.web_rag) {
                std::optional<std::string> opp;
                if (!opening && !opponent_argument.empty()) opp = opponent_argument;
                evidence = retrieve_evidence(hub, plan, role, opp);
                prompt = inject_evidence(prompt, evidence, plan.evidence.max_chars, plan.prompts);
            }

            gateways::ChatRequest req;
            req.engine = role == Role::Pro ? plan.pro_engine : plan.con_engine;
            req.temperature = plan.temperature;
            req.max_tokens = plan.max_tokens;
            req.messages = {{"system", render_system_prompt(topic, plan.prompts)},
                            {"user", prompt}};

            std::string completion;
            try {
                completion = hub.chat(req);
            } catch (const Error& e) {
                throw DebateAbort(std::string("debate aborted at round ") +
                                      std::to_string(round) + " (" + to_string(role) +
                                      "): " + e.what(),
                                  t);
            }

            auto [reasoning, argument] = parse_turn(completion);
            DebateTurn turn;
            turn.round_index = round;
            turn.role = role;
            turn.reasoning = reasoning;
            turn.argument = argument;
            for (const auto& r : evidence) turn.evidence.push_back(r.snippet);
            t.turns.push_back(std::move(turn));

            if (role == Role::Pro) last_pro_argument = argument;
            else last_con_argument = argument;
        }
    }
    return t;
}

}  // namespace inspire::debate
