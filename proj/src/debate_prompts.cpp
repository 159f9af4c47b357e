#include "inspire/debate/prompts.hpp"

#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::debate {

namespace {

const char* kOutputFormat =
    "Output format for each argument:\n"
    "<reasoning and analysis process>\n"
    "<argument>\n"
    "Where:\n"
    "- <reasoning and analysis process> provide causal evidence supporting the argument. Lists "
    "clear, logical reasons or proofs that support your argument.\n"
    "- <argument> is the argument itself. Directly states the position or claim.";

}  // namespace

PromptSet PromptSet::defaults() {
    PromptSet p;
    p.system_template =
        "You are a debater. Hello and welcome to the debate competition.\n"
        "The debate topic is stated as follows:\n{topic}";
    p.opening_template =
        "Give an argument for the {stance} position on the debate topic through step-by-step "
        "reasoning and analysis.\nTopic: {topic}\n\n" +
        std::string(kOutputFormat);
    p.rebuttal_template =
        "{answer}\nYou disagree with my viewpoints. Refute me and give your reasoning analysis "
        "and argument.\n\n" +
        std::string(kOutputFormat);
    p.keyword_system =
        "You are a professional debate assistant. Your task is to extract 1-3 precise search "
        "terms that will help gather factual evidence for the debate.\n"
        "Requirements:\n"
        "1. Generate exactly 1-3 keywords or phrases\n"
        "2. Each keyword should be specific and searchable\n"
        "3. Keywords should be concise (2-4 words each)\n"
        "4. Avoid overly broad or vague terms\n\n"
        "Output Format:\n"
        "Return a JSON array containing exactly 1-3 keywords, like this:\n"
        "[\"keyword1\", \"keyword2\", \"keyword3\"]";
    p.keyword_user_template =
        "Debate Topic: {topic}\nPosition: {position}\nOpponent's Argument: {opponent}\n"
        "Please generate 1-3 precise search keywords.";
    p.evidence_header = "Retrieved evidence:";
    return p;
}

std::string render_system_prompt(const Topic& topic, const PromptSet& prompts) {
    return util::replace_all(prompts.system_template, "{topic}", topic.statement);
}

std::string render_opening_prompt(const Topic& topic, Role role, const PromptSet& prompts) {
    std::string stance = role == Role::Pro ? "affirmative" : "negative";
    std::string out = util::replace_all(prompts.opening_template, "{stance}", stance);
    return util::replace_all(out, "{topic}", topic.statement);
}

std::string render_rebuttal_prompt(const std::string& opponent_answer, const PromptSet& prompts) {
    if (util::trim(opponent_answer).empty())
        throw ValidationError("opponent answer must be non-empty");
    // Escape echoed template markers so the markers appear only as the
    // output-format instruction.
    std::string escaped = util::replace_all(opponent_answer, kReasoningMarker,
                                            "&lt;reasoning and analysis process&gt;");
    escaped = util::replace_all(escaped, kArgumentMarker, "&lt;argument&gt;");
    return util::replace_all(prompts.rebuttal_template, "{answer}", escaped);
}

std::string inject_evidence(const std::string& prompt,
                            const std::vector<gateways::SearchResult>& evidence, int max_chars,
                            const PromptSet& prompts) {
    if (evidence.empty()) return prompt;
    std::string block;
    int used = 0;
    for (size_t i = 0; i < evidence.size(); ++i) {
        const auto& r = evidence[i];
        std::string line = std::to_string(i + 1) + ". " + r.title +
                           (r.title.empty() ? "" : ": ") + r.snippet +
                           (r.link.empty() ? "" : " (" + r.link + ")") + "\n";
        if (used + static_cast<int>(line.size()) > max_chars) {
            if (i == 0) {  // single oversize snippet: hard truncate
                block = line.substr(0, static_cast<size_t>(max_chars));
                if (block.empty() || block.back() != '\n') block += "\n";
            }
            break;
        }
        block += line;
        used += static_cast<int>(line.size());
    }
    if (block.empty()) return prompt;
    return prompts.evidence_header + "\n```\n" + block + "```\n\n" + prompt;
}

std::pair<std::string, std::string> parse_turn(const std::string& completion) {
    auto count = [&](const std::string& marker) {
        size_t n = 0, pos = 0;
        while ((pos = completion.find(marker, pos)) != std::string::npos) {
            ++n;
            pos += marker.size();
        }
        return n;
    };
    size_t r = completion.find(kReasoningMarker);
    size_t a = completion.find(kArgumentMarker);
    if (r == std::string::npos || a == std::string::npos || a < r ||
        count(kReasoningMarker) != 1 || count(kArgumentMarker) != 1)
        return {"", completion};
    std::string reasoning = util::trim(completion.substr(
        r + std::char_traits<char>::length(kReasoningMarker),
        a - r - std::char_traits<char>::length(kReasoningMarker)));
    std::string argument =
        util::trim(completion.substr(a + std::char_traits<char>::length(kArgumentMarker)));
    return {reasoning, argument};
}

std::vector<std::string> extract_keywords(gateways::GatewayHub& hub, const std::string& engine,
                                          const Topic& topic, Role role,
                                          const std::optional<std::string>& opponent_argument,
                                          const PromptSet& prompts) {
    std::string user = util::replace_all(prompts.keyword_user_template, "{topic}", topic.statement);
    user = util::replace_all(user, "{position}", role == Role::Pro ? "affirmative" : "negative");
    user = util::replace_all(user, "{opponent}",
                             opponent_argument ? *opponent_argument : "[none, opening turn]");

    gateways::ChatRequest req;
    req.engine = engine;
    req.temperature = 0.0;
    req.max_tokens = 256;
    req.messages = {{"system", prompts.keyword_system}, {"user", user}};

    auto parse_reply = [](const std::string& reply) -> std::vector<std::string> {
        std::vector<std::string> keywords;
        try {
            nlohmann::json arr = gateways::extract_json(reply);
            if (arr.is_array()) {
                for (const auto& item : arr) {
                    if (!item.is_string()) continue;
                    std::string kw = util::trim(item.get<std::string>());
                    if (!kw.empty()) keywords.push_back(kw);
                    if (keywords.size() == 3) break;
                }
            }
        } catch (const gateways::NoJsonFoundError&) {
        }
        return keywords;
    };

    std::vector<std::string> keywords = parse_reply(hub.chat(req));
    if (!keywords.empty()) return keywords;

    gateways::ChatRequest retry = req;
    retry.sample_tag = "kw-retry";
    retry.messages.push_back({"user", "Reply with only the JSON array of 1-3 keywords."});
    keywords = parse_reply(hub.chat(retry));
    if (!keywords.empty()) return keywords;
    throw KeywordExtractionError("keyword extraction returned no keywords after re-prompt");
}

}  // namespace inspire::debate
