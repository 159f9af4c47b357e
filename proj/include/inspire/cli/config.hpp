#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "inspire/core/json_io.hpp"
#include "inspire/gateways/gateway.hpp"
#include "inspire/scoring/logic.hpp"

namespace inspire::cli {

struct RunConfig {
    std::map<std::string, gateways::EngineConfig> engines;
    std::string judge_engine;
    std::string formalizer_engine;  // empty: same as judge
    int rounds = 4;
    bool web_rag = false;
    int jobs = 4;
    gateways::CassetteMode cassette_mode = gateways::CassetteMode::Live;
    std::string cassette_path;
    double epsilon = 0.05;
    int k_candidates = 4;
    std::string output_root = "runs";
    double debate_temperature = 0.7;
    double sample_temperature = 0.9;
    int max_tokens = 1024;
    int evidence_max_snippets = 5;
    int evidence_max_chars = 1500;
    int search_top_k = 5;
    scoring::VerifyMode logic_mode = scoring::VerifyMode::StrictEngine;
    bool allow_partial = false;
    gateways::GatewayPolicy policy;
};

// Strict schema: unknown keys are rejected with their dotted path; referenced
// judge/formalizer ids must exist in the engine registry.
RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace inspire::cli
