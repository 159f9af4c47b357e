#include <cctype>

#include "inspire/gateways/gateway.hpp"
#include "inspire/util/hash.hpp"
#include "inspire/util/strings.hpp"

// Deterministic offline backend for sim:// engine URLs. Responses are pure
// functions of (base_url, request body), so live runs, recordings and replays
// all agree. Useful for tests and for driving the full pipeline without
// credentials.

namespace inspire::gateways {

namespace {

std::string pick(uint64_t seed, std::initializer_list<const char*> options) {
    auto it = options.begin();
    std::advance(it, static_cast<size_t>(seed % options.size()));
    return *it;
}

std::string score2(uint64_t seed, int salt) {
    // Deterministic score in [0.30, 0.95], two decimals.
    uint64_t h = util::fnv1a64(std::to_string(salt), seed);
    double v = 0.30 + static_cast<double>(h % 66) / 100.0;
    return util::format_fixed(v, 2);
}

std::string first_words(const std::string& text, size_t n) {
    std::vector<std::string> words;
    for (const std::string& w : util::split(util::collapse_whitespace(text), ' ')) {
        if (w.empty()) continue;
        words.push_back(w);
        if (words.size() == n) break;
    }
    return util::join(words, " ");
}

std::string topic_of(const std::string& system_prompt) {
    size_t pos = system_prompt.find("stated as follows:");
    if (pos == std::string::npos) return "the motion";
    std::string rest = util::trim(system_prompt.substr(pos + std::string("stated as follows:").size()));
    return rest.empty() ? "the motion" : rest;
}

class SimTransport : public Transport {
public:
    HttpResponse post_json(const std::string& base_url, const std::string& path,
                           const std::map<std::string, std::string>& headers,
                           const std::string& body) override {
        (void)headers;
        if (path.find("/search") != std::string::npos) return search_response(base_url, body);
        return chat_response(base_url, body);
    }

private:
    HttpResponse search_response(const std::string& base_url, const std::string& body) {
        nlohmann::json req = nlohmann::json::parse(body);
        std::string q = req.value("q", "");
        uint64_t seed = util::fnv1a64(base_url + "|" + q);
        nlohmann::ordered_json organic = nlohmann::ordered_json::array();
        int n = 2 + static_cast<int>(seed % 3);
        for (int i = 0; i < n; ++i) {
            uint64_t h = util::fnv1a64(std::to_string(i), seed);
            organic.push_back(
                {{"title", "Source " + std::to_string(i + 1) + ": " + first_words(q, 4)},
                 {"snippet", pick(h, {"Reports published in recent years discuss ",
                                      "A peer-reviewed study examined ",
                                      "Government statistics summarize ",
                                      "An industry survey covered "}) +
                                 first_words(q, 6) + " with mixed findings."},
                 {"link", "https://example.org/" + util::hex64(h).substr(0, 10)}});
        }
        nlohmann::ordered_json resp{{"searchParameters", {{"q", q}}}, {"organic", organic}};
        return HttpResponse{200, resp.dump()};
    }

    HttpResponse chat_response(const std::string& base_url, const std::string& body) {
        nlohmann::json req = nlohmann::json::parse(body);
        std::string model = req.value("model", "sim");
        std::string system, user;
        for (const auto& m : req.value("messages", nlohmann::json::array())) {
            std::string role = m.value("role", "");
            if (role == "system" && system.empty()) system = m.value("content", "");
            if (role == "user") user = m.value("content", "");  // last user message wins
        }
        uint64_t seed = util::fnv1a64(base_url + "|" + body);
        std::string content = respond(seed, base_url, system, user);
        nlohmann::ordered_json resp{
            {"id", "sim-" + util::hex64(seed).substr(0, 10)},
            {"object", "chat.completion"},
            {"model", model},
            {"choices",
             nlohmann::ordered_json::array(
                 {nlohmann::ordered_json{{"index", 0},
                                         {"message", {{"role", "assistant"}, {"content", content}}},
                                         {"finish_reason", "stop"}}})}};
        return HttpResponse{200, resp.dump()};
    }

    std::string respond(uint64_t seed, const std::string& base_url, const std::string& system,
                        const std::string& user) {
        if (util::contains(system, "extract 1-3 precise search terms"))
            return keyword_reply(seed, user);
        if (util::contains(system, "experienced debate judge")) return judge_reply(seed);
        if (util::contains(system, "breaking down reasoning")) return facts_reply(seed, user);
        if (util::contains(system, "generate relevant queries")) return queries_reply(seed, user);
        if (util::contains(system, "verify the provided facts")) return verify_reply(seed, user);
        if (util::contains(system, "Logical Formalization")) return fol_reply(seed);
        if (util::contains(system, "Logical Inference")) return fol_judge_reply(seed, user);
        return debater_reply(seed, base_url, system, user);
    }

    std::string debater_reply(uint64_t seed, const std::string& base_url,
                              const std::string& system, const std::string& user) {
        std::string topic = topic_of(system);
        if (util::contains(topic, "REFUSE_ME") || util::contains(user, "REFUSE_ME"))
            return "I can't provide an argument for that position on this topic. Is there "
                   "anything else I can help you with?";
        std::string flavor = base_url.substr(base_url.find("//") + 2);
        bool rebuttal = util::contains(user, "Refute me");
        std::string stance =
            util::contains(user, "affirmative") ? "affirmative" : "negative";
        uint64_t h1 = util::fnv1a64("r1", seed), h2 = util::fnv1a64("r2", seed);
        std::string pct = std::to_string(5 + static_cast<int>(h1 % 40));
        std::string year = std::to_string(2015 + static_cast<int>(h2 % 9));
        std::string opener = rebuttal
                                 ? "My opponent overstates the case. "
                                 : "";
        std::string reasoning =
            "1. " + opener + pick(h1, {"Published surveys from ", "Longitudinal data from ",
                                       "Field studies from ", "Census figures from "}) +
            year + " indicate a " + pct + " percent shift relevant to " +
            first_words(topic, 5) + ".\n2. " +
            pick(h2, {"Institutional incentives align with this position.",
                      "Comparable policies produced measurable benefits elsewhere.",
                      "The counterfactual carries documented economic costs.",
                      "Expert consensus has moved toward this reading."}) +
            "\n3. As " + flavor + " debaters argue, the " + stance +
            " reading is the coherent one.";
        std::string argument =
            (rebuttal ? "The rebuttal stands: " : "") + first_words(topic, 6) +
            pick(seed, {" should be endorsed on the evidence.",
                        " deserves support given the documented record.",
                        " is the position best backed by data.",
                        " withstands scrutiny on every count."});
        return "<reasoning and analysis process>\n" + reasoning + "\n<argument>\n" + argument;
    }

    std::string keyword_reply(uint64_t seed, const std::string& user) {
        std::string topic;
        size_t pos = user.find("Debate Topic:");
        if (pos != std::string::npos) {
            std::string rest = user.substr(pos + std::string("Debate Topic:").size());
            topic = first_words(rest, 3);
        }
        if (topic.empty()) topic = "policy debate";
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        arr.push_back(topic + " statistics");
        if (seed % 2 == 0) arr.push_back(topic + " outcomes study");
        return arr.dump();
    }

    std::string judge_reply(uint64_t seed) {
        auto side = [&](const char* name, int salt) {
            std::string ea = score2(seed, salt + 1), ac = score2(seed, salt + 2),
                        aa = score2(seed, salt + 3), tr = score2(seed, salt + 4);
            double total = std::stod(ea) + std::stod(ac) + std::stod(aa) + std::stod(tr);
            return std::string("  \"") + name + "\": {\n" +
                   "    \"Emotional Appeal\": \"" + ea + "\",\n" +
                   "    \"Argument Clarity\": \"" + ac + "\",\n" +
                   "    \"Argument Arrangement\": \"" + aa + "\",\n" +
                   "    \"Relevance to Debate Topic\": \"" + tr + "\",\n" +
                   "    \"Total Score\": \"" + util::format_fixed(total, 2) + "\"}";
        };
        std::string winner = (seed % 2 == 0) ? "Pro" : "Con";
        return "{\n" + side("Pro (Affirmative Side) Score", 10) + ",\n" +
               side("Con (Negative Side) Score", 50) + ",\n  \"Winner\": \"" + winner +
               "\",\n  \"Reason\": \"" +
               pick(seed, {"Clearer structure and stronger grounding decided it.",
                           "Better evidence use and arrangement on the winning side.",
                           "The winning side stayed closer to the motion."}) +
               "\"\n}";
    }

    std::string facts_reply(uint64_t seed, const std::string& user) {
        std::string text = user;
        size_t pos = user.find("Reasoning Process and Argument:");
        if (pos != std::string::npos)
            text = user.substr(pos + std::string("Reasoning Process and Argument:").size());
        std::vector<std::string> sentences;
        for (const std::string& part : util::split(text, '.')) {
            std::string s = util::trim(util::collapse_whitespace(part));
            if (s.size() > 20) sentences.push_back(s);
            if (sentences.size() == 3) break;
        }
        if (sentences.empty()) sentences.push_back("The turn makes one unverifiable claim");
        int n = 1 + static_cast<int>(seed % sentences.size());
        nlohmann::ordered_json out;
        for (int i = 0; i < n; ++i) out["fact-" + std::to_string(i + 1)] = sentences[i] + ".";
        return out.dump(2);
    }

    std::string queries_reply(uint64_t seed, const std::string& user) {
        nlohmann::json facts;
        try {
            facts = extract_json(user);
        } catch (const NoJsonFoundError&) {
            facts = nlohmann::json::object();
        }
        std::string head;
        if (facts.is_object() && !facts.empty())
            head = first_words(facts.begin().value().get<std::string>(), 5);
        if (head.empty()) head = "debate claim";
        std::string second = pick(seed, {"evidence review", "fact check", "statistics source"});
        return "1. " + head + "\n2. " + head + " " + second;
    }

    std::string verify_reply(uint64_t seed, const std::string& user) {
        nlohmann::json facts;
        try {
            facts = extract_json(user);
        } catch (const NoJsonFoundError&) {
            facts = nlohmann::json::object();
        }
        nlohmann::ordered_json out;
        int i = 0;
        for (auto it = facts.begin(); it != facts.end(); ++it, ++i) {
            uint64_t h = util::fnv1a64(it.key(), seed);
            int r = static_cast<int>(h % 10);
            out[it.key()] = r < 6 ? "true" : (r < 8 ? "unknown" : "false");
        }
        if (out.empty()) out["fact-1"] = "unknown";
        return out.dump(2);
    }

    std::string fol_reply(uint64_t seed) {
        bool extra = (seed % 3) != 0;  // second, underivable conclusion
        std::string doc =
            "Predicates:\n"
            "1. EvidenceSupports(x) ::: x is supported by the cited evidence.\n"
            "2. ShouldAdopt(x) ::: x should be adopted.\n"
            "Premises:\n"
            "1. EvidenceSupports(CorePosition) ::: The cited studies support the core position.\n"
            "2. EvidenceSupports(x) → ShouldAdopt(x) ::: Whatever the evidence supports should be "
            "adopted.\n"
            "Conclusions:\n"
            "1. ShouldAdopt(CorePosition) ::: The core position should be adopted.\n";
        if (extra)
            doc += "2. ShouldAdopt(Counterpoint) ::: The counterpoint should be adopted too.\n";
        return doc;
    }

    std::string fol_judge_reply(uint64_t seed, const std::string& user) {
        int conclusions = 0;
        bool in_section = false;
        for (const std::string& line : util::split_lines(user)) {
            std::string low = util::to_lower(util::trim(line));
            if (low.rfind("conclusions", 0) == 0) {
                in_section = true;
                continue;
            }
            if (in_section && !util::trim(line).empty() &&
                std::isdigit(static_cast<unsigned char>(util::trim(line)[0])))
                ++conclusions;
        }
        if (conclusions == 0) conclusions = 1;
        std::string out;
        for (int i = 0; i < conclusions; ++i) {
            uint64_t h = util::fnv1a64(std::to_string(i), seed);
            const char* v = (h % 4 == 0) ? "unknown" : "true";
            out += "Conclusion " + std::to_string(i + 1) + ": {" + v + "} (per the premises)\n";
        }
        return out;
    }
};

}  // namespace

std::unique_ptr<Transport> make_sim_transport() { return std::make_unique<SimTransport>(); }

}  // namespace inspire::gateways
