#pragma once

#include "inspire/core/types.hpp"
#include "inspire/debate/prompts.hpp"
#include "inspire/gateways/gateway.hpp"

namespace inspire::debate {

struct EvidenceBudget {
    int max_snippets = 5;
    int max_chars = 1500;
};

struct DebatePlan {
    Topic topic;
    std::string pro_engine;
    std::string con_engine;
    int rounds = 4;
    bool web_rag = false;
    EvidenceBudget evidence;
    double temperature = 0.7;
    int max_tokens = 1024;
    PromptSet prompts = PromptSet::defaults();
};

// A gateway failure mid-debate; carries the turns completed so far.
class DebateAbort : public Error {
public:
    DebateAbort(const std::string& what, DebateTranscript partial)
        : Error(what), partial_(std::move(partial)) {}
    const DebateTranscript& partial() const { return partial_; }

private:
    DebateTranscript partial_;
};

// Runs m rounds of Pro-then-Con turns. Pro's opening uses the opening
// template; every later turn rebuts the latest opposing argument. With
// web_rag on, each turn is preceded by keyword extraction and one search;
// retrieval failures degrade that turn's evidence only.
DebateTranscript run_debate(gateways::GatewayHub& hub, const DebatePlan& plan);

}  // namespace inspire::debate
