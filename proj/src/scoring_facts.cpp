#include "inspire/scoring/facts.hpp"

#include <algorithm>
#include <cctype>

#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::scoring {

namespace {

const char* kExtractSystemPrompt =
    "You are tasked with breaking down reasoning processes and arguments into atomic facts. "
    "Follow these instructions:\n"
    "1. An atomic fact is a single, standalone statement containing one idea or piece of "
    "information.\n"
    "2. Each atomic fact should capture a distinct piece of information and avoid overlaps.\n"
    "3. For the reasoning process, break down each statement into separate facts labeled "
    "sequentially.\n"
    "4. For the argument, break down each reason provided into atomic facts labeled "
    "sequentially.\n"
    "5. Provide the output in JSON format as follows:\n"
    "{\n"
    "    'fact-1':'X',\n"
    "    'fact-2':'X',\n"
    "     ...,\n"
    "    'fact-<n>':'X'\n"
    "}\n"
    "Ensure sequential numbering is consistent across reasoning and argument sections.";

const char* kQuerySystemPrompt =
    "You are an expert fact-checking assistant. Your task is to analyze the provided JSON "
    "content and generate relevant queries that should be searched on the internet (e.g., "
    "Google) to validate the facts.\n"
    "Propose precise and actionable search queries that can help verify the claims.\n"
    "Your response should only include the search queries in a clear and concise list, and must "
    "not exceed 2000 characters.";

const char* kVerifySystemPrompt =
    "You are an expert fact-checking assistant. Your task is to verify the provided facts in "
    "the JSON content using the search results.\n"
    "For each fact, determine if it is \"true\", \"false\", or \"unknown\" based on the "
    "evidence.\n"
    "(1) \"True\" means strong and reliable evidence supports the fact.\n"
    "(2) \"False\" means strong and reliable evidence disproves the fact.\n"
    "(3) \"Unknown\" means the evidence is insufficient or inconclusive.\n"
    "- Provide the output in the following JSON format:\n"
    "- Be specific and logical in your assessment, focusing on the factual accuracy of each "
    "claim.\n\n"
    "- If the search results are empty, rely on your existing knowledge to assess the factual "
    "accuracy of the claims.\n\n"
    "Output your analysis in the following JSON format:\n"
    "{\n"
    "    'fact-1': 'true/false/unknown',\n"
    "    'fact-2': 'true/false/unknown',\n"
    "}";

std::string debate_text(const DebateTurn& turn) {
    if (turn.reasoning.empty()) return turn.argument;
    return turn.reasoning + "\n" + turn.argument;
}

nlohmann::ordered_json facts_to_json(const std::vector<AtomicFact>& facts) {
    nlohmann::ordered_json j;
    for (const AtomicFact& f : facts) j[f.id] = f.text;
    return j;
}

nlohmann::ordered_json results_to_json(const std::vector<gateways::SearchResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results)
        arr.push_back({{"title", r.title}, {"snippet", r.snippet}, {"link", r.link}});
    return arr;
}

// Parses {"fact-3": "..."} objects; returns facts sorted by their numeric
// suffix, renumbered sequentially from fact-1.
std::vector<AtomicFact> parse_fact_object(const nlohmann::json& obj) {
    std::vector<std::pair<long, std::string>> numbered;
    if (!obj.is_object()) return {};
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const std::string& key = it.key();
        if (key.rfind("fact-", 0) != 0 || !it.value().is_string()) continue;
        std::string text = util::trim(it.value().get<std::string>());
        if (text.empty()) continue;
        try {
            numbered.emplace_back(std::stol(key.substr(5)), text);
        } catch (const std::exception&) {
        }
    }
    std::sort(numbered.begin(), numbered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AtomicFact> facts;
    for (size_t i = 0; i < numbered.size(); ++i)
        facts.push_back(AtomicFact{"fact-" + std::to_string(i + 1), numbered[i].second});
    return facts;
}

}  // namespace

const char* to_string(FactVerdict v) {
    switch (v) {
        case FactVerdict::True: return "true";
        case FactVerdict::False: return "false";
        case FactVerdict::Unknown: return "unknown";
    }
    return "?";
}

FactVerdict fact_verdict_from_string(const std::string& s) {
    std::string low = util::to_lower(util::trim(s));
    if (low == "true") return FactVerdict::True;
    if (low == "false") return FactVerdict::False;
    return FactVerdict::Unknown;
}

int RoundFactReport::supported() const {
    int n = 0;
    for (const auto& [id, v] : verdicts)
        if (v == FactVerdict::True) ++n;
    return n;
}

int RoundFactReport::total() const { return static_cast<int>(facts.size()); }

std::vector<AtomicFact> extract_atomic_facts(gateways::GatewayHub& hub, const std::string& engine,
                                             const Topic& topic, const DebateTurn& turn) {
    if (util::trim(turn.argument).empty())
        throw ValidationError("fact extraction needs a turn with a non-empty argument");

    gateways::ChatRequest req;
    req.engine = engine;
    req.temperature = 0.0;
    req.max_tokens = 1024;
    req.messages = {{"system", kExtractSystemPrompt},
                    {"user", "Topic: " + topic.statement + "\nReasoning Process and Argument: " +
                                 debate_text(turn) +
                                 "\n\nBreak the reasoning process and argument into atomic facts "
                                 "according to the instructions. Provide the response in JSON "
                                 "format."}};

    auto attempt = [&](const gateways::ChatRequest& r) -> std::vector<AtomicFact> {
        try {
            return parse_fact_object(gateways::extract_json(hub.chat(r)));
        } catch (const gateways::NoJsonFoundError&) {
            return {};
        }
    };

    std::vector<AtomicFact> facts = attempt(req);
    if (!facts.empty()) return facts;
    gateways::ChatRequest retry = req;
    retry.sample_tag = "facts-retry";
    retry.messages.push_back(
        {"user", "Reply with only the JSON object of atomic facts, at least fact-1."});
    facts = attempt(retry);
    if (!facts.empty()) return facts;
    throw FactExtractionError("no atomic facts extracted after re-prompt (round " +
                              std::to_string(turn.round_index) + ", " + to_string(turn.role) +
                              ")");
}

std::vector<std::string> generate_queries(gateways::GatewayHub& hub, const std::string& engine,
                                          const std::vector<AtomicFact>& facts) {
    if (facts.empty()) throw ValidationError("generate_queries needs at least one fact");

    gateways::ChatRequest req;
    req.engine = engine;
    req.temperature = 0.0;
    req.max_tokens = 512;
    req.messages = {{"system", kQuerySystemPrompt},
                    {"user", "Analyze the following JSON debate content and generate grouped "
                             "search queries to validate the claims:\n" +
                                 facts_to_json(facts).dump(2)}};

    std::string reply;
    try {
        reply = hub.chat(req);
    } catch (const Error& e) {
        util::log_warn("query generation failed, degrading to no-search verification: ",
                       e.what());
        return {};
    }

    std::vector<std::string> raw;
    try {
        nlohmann::json arr = gateways::extract_json(reply);
        if (arr.is_array())
            for (const auto& item : arr)
                if (item.is_string()) raw.push_back(item.get<std::string>());
    } catch (const gateways::NoJsonFoundError&) {
    }
    if (raw.empty()) {
        for (std::string line : util::split_lines(reply)) {
            std::string s = util::trim(line);
            if (s.empty()) continue;
            // strip list decoration
            size_t i = 0;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' ||
                                    s[i] == ')' || s[i] == '-' || s[i] == '*' || s[i] == ' '))
                ++i;
            s = util::trim(s.substr(i));
            if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
            if (!s.empty()) raw.push_back(s);
        }
    }

    // Table-style limit: serialized list must not exceed 2000 characters;
    // truncate at the last whole query under the limit.
    std::vector<std::string> queries;
    size_t used = 0;
    for (const std::string& q : raw) {
        size_t cost = q.size() + (queries.empty() ? 0 : 1);
        if (used + cost > 2000) break;
        queries.push_back(q);
        used += cost;
    }
    return queries;
}

std::map<std::string, FactVerdict> verify_facts(gateways::GatewayHub& hub,
                                                const std::string& engine,
                                                const std::vector<AtomicFact>& facts,
                                                const std::vector<gateways::SearchResult>& results,
                                                std::vector<std::string>* warnings) {
    if (facts.empty()) throw ValidationError("verify_facts needs a non-empty fact set");

    auto make_request = [&](const std::string& tag, const std::string& extra) {
        gateways::ChatRequest req;
        req.engine = engine;
        req.temperature = 0.0;
        req.max_tokens = 768;
        req.sample_tag = tag;
        req.messages = {{"system", kVerifySystemPrompt},
                        {"user", "JSON Content: " + facts_to_json(facts).dump(2) +
                                     "\nSearch Results: " + results_to_json(results).dump() +
                                     "\nAnalyze the search results and verify the facts in the "
                                     "JSON content. Provide conclusions in the specified JSON "
                                     "format." +
                                     extra}};
        return req;
    };

    std::map<std::string, FactVerdict> verdicts;
    auto absorb = [&](const std::string& reply) {
        try {
            nlohmann::json obj = gateways::extract_json(reply);
            if (!obj.is_object()) return;
            for (const AtomicFact& f : facts) {
                if (verdicts.count(f.id)) continue;
                if (obj.contains(f.id) && obj[f.id].is_string())
                    verdicts[f.id] = fact_verdict_from_string(obj[f.id].get<std::string>());
            }
        } catch (const gateways::NoJsonFoundError&) {
        }
    };

    absorb(hub.chat(make_request("", "")));
    if (verdicts.size() < facts.size()) {
        std::string missing;
        for (const AtomicFact& f : facts)
            if (!verdicts.count(f.id)) missing += (missing.empty() ? "" : ", ") + f.id;
        absorb(hub.chat(make_request("verify-retry",
                                     "\nYour previous reply did not cover: " + missing +
                                         ". Cover every fact id exactly once.")));
    }
    for (const AtomicFact& f : facts) {
        if (!verdicts.count(f.id)) {
            verdicts[f.id] = FactVerdict::Unknown;
            std::string w = f.id + " missing from verification reply; filled Unknown";
            if (warnings) warnings->push_back(w);
            util::log_warn(w);
        }
    }
    return verdicts;
}

RoundFactReport fact_check_turn(gateways::GatewayHub& hub, const FactPipelineOptions& opts,
                                const Topic& topic, const DebateTurn& turn) {
    RoundFactReport report;
    report.round_index = turn.round_index;
    report.side = turn.role;
    report.facts = extract_atomic_facts(hub, opts.engine, topic, turn);

    std::vector<gateways::SearchResult> pooled;
    std::vector<std::string> queries = generate_queries(hub, opts.engine, report.facts);
    for (const std::string& q : queries) {
        try {
            std::string query = q.size() > 2048 ? q.substr(0, 2048) : q;
            auto results = hub.search(query, opts.search_top_k);
            pooled.insert(pooled.end(), results.begin(), results.end());
        } catch (const Error& e) {
            report.warnings.push_back("search failed for query '" + q + "': " + e.what());
            util::log_warn(report.warnings.back());
        }
    }
    report.verdicts = verify_facts(hub, opts.engine, report.facts, pooled, &report.warnings);
    return report;
}

double score_fact_authenticity(const std::vector<RoundFactReport>& reports) {
    long supported = 0, total = 0;
    for (const RoundFactReport& r : reports) {
        supported += r.supported();
        total += r.total();
    }
    if (total == 0)
        throw UndefinedScoreError("fact-authenticity denominator is zero (no facts)");
    return static_cast<double>(supported) / static_cast<double>(total);
}

double score_fact_authenticity(gateways::GatewayHub& hub, const FactPipelineOptions& opts,
                               const DebateTranscript& t, Role side,
                               std::vector<RoundFactReport>* reports_out) {
    std::vector<RoundFactReport> reports;
    for (const DebateTurn& turn : t.turns) {
        if (turn.role != side) continue;
        try {
            reports.push_back(fact_check_turn(hub, opts, t.topic, turn));
        } catch (const FactExtractionError& e) {
            if (!opts.allow_partial) throw;
            util::log_warn("allow-partial: skipping fact check: ", e.what());
        }
    }
    if (reports_out) *reports_out = reports;
    return score_fact_authenticity(reports);
}

nlohmann::ordered_json fact_report_to_json(const RoundFactReport& r) {
    nlohmann::ordered_json facts = nlohmann::ordered_json::array();
    for (const AtomicFact& f : r.facts)
        facts.push_back({{"id", f.id},
                         {"text", f.text},
                         {"verdict", to_string(r.verdicts.at(f.id))}});
    return nlohmann::ordered_json{{"schema", "inspire/fact-report/v1"},
                                  {"round", r.round_index},
                                  {"side", to_string(r.side)},
                                  {"facts", facts},
                                  {"supported", r.supported()},
                                  {"total", r.total()},
                                  {"warnings", r.warnings}};
}

}  // namespace inspire::scoring
