#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "inspire/core/types.hpp"
#include "inspire/gateways/gateway.hpp"

namespace inspire::scoring {

class FactExtractionError : public Error {
public:
    using Error::Error;
};

struct AtomicFact {
    std::string id;  // "fact-<n>", sequential from fact-1
    std::string text;
};

enum class FactVerdict { True, False, Unknown };

const char* to_string(FactVerdict v);
FactVerdict fact_verdict_from_string(const std::string& s);  // unparseable -> Unknown

struct RoundFactReport {
    int round_index = 0;
    Role side = Role::Pro;
    std::vector<AtomicFact> facts;
    std::map<std::string, FactVerdict> verdicts;  // one entry per fact id
    std::vector<std::string> warnings;

    int supported() const;  // f_i: verdicts counted True
    int total() const;      // NF_i
};

// Stage 1: break a turn into atomic facts; ids renumbered sequentially when
// the reply skips numbers. One re-prompt, then FactExtractionError.
std::vector<AtomicFact> extract_atomic_facts(gateways::GatewayHub& hub, const std::string& engine,
                                             const Topic& topic, const DebateTurn& turn);

// Stage 2: grouped search queries for the fact set; total serialized length
// capped at 2000 characters (truncated at the last whole query under the
// limit). An empty list is a valid outcome (verification then runs without
// search results).
std::vector<std::string> generate_queries(gateways::GatewayHub& hub, const std::string& engine,
                                          const std::vector<AtomicFact>& facts);

// Stage 3: verdict per fact against pooled evidence. Every input id appears
// exactly once; unparseable or missing verdicts map to Unknown (missing ids
// get one re-prompt first).
std::map<std::string, FactVerdict> verify_facts(gateways::GatewayHub& hub,
                                                const std::string& engine,
                                                const std::vector<AtomicFact>& facts,
                                                const std::vector<gateways::SearchResult>& results,
                                                std::vector<std::string>* warnings = nullptr);

struct FactPipelineOptions {
    std::string engine;   // fact-checking judge engine
    int search_top_k = 5;
    bool allow_partial = false;
};

// Full three-stage pipeline for one turn.
RoundFactReport fact_check_turn(gateways::GatewayHub& hub, const FactPipelineOptions& opts,
                                const Topic& topic, const DebateTurn& turn);

// S_FA = sum of supported counts / sum of fact counts; zero denominator is an
// UndefinedScoreError, never 0.0.
double score_fact_authenticity(const std::vector<RoundFactReport>& reports);

double score_fact_authenticity(gateways::GatewayHub& hub, const FactPipelineOptions& opts,
                               const DebateTranscript& t, Role side,
                               std::vector<RoundFactReport>* reports_out = nullptr);

nlohmann::ordered_json fact_report_to_json(const RoundFactReport& r);

}  // namespace inspire::scoring
