#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inspire/core/types.hpp"
#include "inspire/gateways/gateway.hpp"

namespace inspire::debate {

inline constexpr const char* kReasoningMarker = "<reasoning and analysis process>";
inline constexpr const char* kArgumentMarker = "<argument>";

// Template set driving the debate. Opening/rebuttal templates carry both
// output-format markers.
struct PromptSet {
    std::string system_template;
    std::string opening_template;
    std::string rebuttal_template;
    std::string keyword_system;
    std::string keyword_user_template;
    std::string evidence_header;

    static PromptSet defaults();
};

std::string render_system_prompt(const Topic& topic, const PromptSet& prompts = PromptSet::defaults());
std::string render_opening_prompt(const Topic& topic, Role role,
                                  const PromptSet& prompts = PromptSet::defaults());
// opponent_answer must be non-empty; marker-like text inside it is escaped so
// parse_turn cannot be confused by echoed content.
std::string render_rebuttal_prompt(const std::string& opponent_answer,
                                   const PromptSet& prompts = PromptSet::defaults());

// Prepends a fenced "Retrieved evidence:" block of numbered snippets,
// truncated to the character budget (whole snippets only).
std::string inject_evidence(const std::string& prompt,
                            const std::vector<gateways::SearchResult>& evidence, int max_chars,
                            const PromptSet& prompts = PromptSet::defaults());

// Splits a completion at the two output-format markers. Markers absent,
// duplicated or reversed: reasoning = "" and argument = whole completion.
std::pair<std::string, std::string> parse_turn(const std::string& completion);

class KeywordExtractionError : public Error {
public:
    using Error::Error;
};

// Prompts the engine per the keyword-extraction template and parses the JSON
// array reply into 1..3 keywords; one re-prompt, then failure.
std::vector<std::string> extract_keywords(gateways::GatewayHub& hub, const std::string& engine,
                                          const Topic& topic, Role role,
                                          const std::optional<std::string>& opponent_argument,
                                          const PromptSet& prompts = PromptSet::defaults());

}  // namespace inspire::debate
