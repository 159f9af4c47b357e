#include "inspire/cli/config.hpp"

#include <set>

#include "inspire/util/fs.hpp"

namespace inspire::cli {

namespace {

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed,
                         const std::string& prefix) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError(prefix.empty() ? it.key() : prefix + "." + it.key(),
                              "unknown configuration key");
}

template <typename T>
T get_or(const Json& obj, const std::string& key, const T& fallback, const std::string& prefix) {
    if (!obj.contains(key)) return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(prefix.empty() ? key : prefix + "." + key, e.what());
    }
}

}  // namespace

RunConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("", "configuration root must be a JSON object");
    reject_unknown_keys(
        j,
        {"engines", "judge_engine", "formalizer_engine", "rounds", "web_rag", "jobs",
         "cassette_mode", "cassette_path", "epsilon", "k_candidates", "output_root",
         "debate_temperature", "sample_temperature", "max_tokens", "evidence_max_snippets",
         "evidence_max_chars", "search_top_k", "logic_mode", "allow_partial", "policy"},
        "");

    RunConfig config;
    if (!j.contains("engines") || !j.at("engines").is_object() || j.at("engines").empty())
        throw ConfigError("engines", "at least one engine must be configured");
    for (auto it = j.at("engines").begin(); it != j.at("engines").end(); ++it) {
        std::string prefix = "engines." + it.key();
        if (!it.value().is_object()) throw ConfigError(prefix, "engine entry must be an object");
        reject_unknown_keys(it.value(), {"base_url", "model", "api_key_env"}, prefix);
        gateways::EngineConfig e;
        e.id = it.key();
        e.base_url = get_or<std::string>(it.value(), "base_url", "", prefix);
        if (e.base_url.empty()) throw ConfigError(prefix + ".base_url", "required");
        e.model = get_or<std::string>(it.value(), "model", it.key(), prefix);
        e.api_key_env =
            get_or<std::string>(it.value(), "api_key_env", "INSPIRE_LLM_API_KEY", prefix);
        config.engines.emplace(e.id, std::move(e));
    }

    config.judge_engine = get_or<std::string>(j, "judge_engine", "", "");
    if (!config.judge_engine.empty() && !config.engines.count(config.judge_engine))
        throw ConfigError("judge_engine",
                          "references undefined engine id '" + config.judge_engine + "'");
    config.formalizer_engine = get_or<std::string>(j, "formalizer_engine", "", "");
    if (!config.formalizer_engine.empty() && !config.engines.count(config.formalizer_engine))
        throw ConfigError("formalizer_engine",
                          "references undefined engine id '" + config.formalizer_engine + "'");

    config.rounds = get_or<int>(j, "rounds", 4, "");
    if (config.rounds < 1) throw ConfigError("rounds", "must be >= 1");
    config.web_rag = get_or<bool>(j, "web_rag", false, "");
    config.jobs = get_or<int>(j, "jobs", 4, "");
    if (config.jobs < 1) throw ConfigError("jobs", "must be >= 1");
    if (j.contains("cassette_mode")) {
        try {
            config.cassette_mode =
                gateways::cassette_mode_from_string(j.at("cassette_mode").get<std::string>());
        } catch (const Error& e) {
            throw ConfigError("cassette_mode", e.what());
        }
    }
    config.cassette_path = get_or<std::string>(j, "cassette_path", "", "");
    config.epsilon = get_or<double>(j, "epsilon", 0.05, "");
    if (config.epsilon < 0) throw ConfigError("epsilon", "must be >= 0");
    config.k_candidates = get_or<int>(j, "k_candidates", 4, "");
    if (config.k_candidates < 2) throw ConfigError("k_candidates", "must be >= 2");
    config.output_root = get_or<std::string>(j, "output_root", "runs", "");
    config.debate_temperature = get_or<double>(j, "debate_temperature", 0.7, "");
    config.sample_temperature = get_or<double>(j, "sample_temperature", 0.9, "");
    config.max_tokens = get_or<int>(j, "max_tokens", 1024, "");
    config.evidence_max_snippets = get_or<int>(j, "evidence_max_snippets", 5, "");
    config.evidence_max_chars = get_or<int>(j, "evidence_max_chars", 1500, "");
    config.search_top_k = get_or<int>(j, "search_top_k", 5, "");
    if (j.contains("logic_mode")) {
        std::string mode = j.at("logic_mode").get<std::string>();
        if (mode == "strict-engine") config.logic_mode = scoring::VerifyMode::StrictEngine;
        else if (mode == "llm-judge") config.logic_mode = scoring::VerifyMode::LlmJudge;
        else throw ConfigError("logic_mode", "must be 'strict-engine' or 'llm-judge'");
    }
    config.allow_partial = get_or<bool>(j, "allow_partial", false, "");

    if (j.contains("policy")) {
        const Json& p = j.at("policy");
        if (!p.is_object()) throw ConfigError("policy", "must be an object");
        reject_unknown_keys(
            p, {"max_retries", "backoff_base_ms", "requests_per_minute", "timeout_seconds"},
            "policy");
        config.policy.max_retries = get_or<int>(p, "max_retries", 3, "policy");
        if (config.policy.max_retries < 0) throw ConfigError("policy.max_retries", "must be >= 0");
        config.policy.backoff_base_ms = get_or<int>(p, "backoff_base_ms", 500, "policy");
        config.policy.requests_per_minute = get_or<int>(p, "requests_per_minute", 60, "policy");
        config.policy.timeout_seconds = get_or<int>(p, "timeout_seconds", 30, "policy");
        if (config.policy.timeout_seconds <= 0)
            throw ConfigError("policy.timeout_seconds", "must be > 0");
    }
    return config;
}

Json config_to_json(const RunConfig& config) {
    Json engines = Json::object();
    for (const auto& [id, e] : config.engines)
        engines[id] = Json{
            {"base_url", e.base_url}, {"model", e.model}, {"api_key_env", e.api_key_env}};
    return Json{{"engines", engines},
                {"judge_engine", config.judge_engine},
                {"formalizer_engine", config.formalizer_engine},
                {"rounds", config.rounds},
                {"web_rag", config.web_rag},
                {"jobs", config.jobs},
                {"cassette_mode", gateways::to_string(config.cassette_mode)},
                {"cassette_path", config.cassette_path},
                {"epsilon", config.epsilon},
                {"k_candidates", config.k_candidates},
                {"output_root", config.output_root},
                {"debate_temperature", config.debate_temperature},
                {"sample_temperature", config.sample_temperature},
                {"max_tokens", config.max_tokens},
                {"evidence_max_snippets", config.evidence_max_snippets},
                {"evidence_max_chars", config.evidence_max_chars},
                {"search_top_k", config.search_top_k},
                {"logic_mode", scoring::to_string(config.logic_mode)},
                {"allow_partial", config.allow_partial},
                {"policy", Json{{"max_retries", config.policy.max_retries},
                                {"backoff_base_ms", config.policy.backoff_base_ms},
                                {"requests_per_minute", config.policy.requests_per_minute},
                                {"timeout_seconds", config.policy.timeout_seconds}}}};
}

RunConfig load_config(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw ConfigError(path.string(), "configuration file not found");
    Json j = Json::parse(util::read_file(path), nullptr, true, true);  // allow comments
    return config_from_json(j);
}

}  // namespace inspire::cli
