#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "inspire/core/types.hpp"
#include "inspire/fol/parser.hpp"
#include "inspire/fol/prover.hpp"
#include "inspire/gateways/gateway.hpp"

namespace inspire::scoring {

class FormalizationError : public Error {
public:
    using Error::Error;
};

enum class VerifyMode { StrictEngine, LlmJudge };

const char* to_string(VerifyMode mode);

struct FormalizedTurn {
    int round_index = 0;
    Role role = Role::Pro;
    fol::FolDocument document;
    std::string raw_formalization;
    std::string mode_used;
    std::vector<std::string> warnings;
};

struct ConclusionVerdict {
    std::string conclusion;  // canonical text (or the unparseable line)
    fol::Verdict verdict = fol::Verdict::Unknown;
    std::optional<fol::Derivation> derivation;
};

std::string render_formalization_system_prompt();
std::string render_inference_system_prompt();

// LLM formalization of a turn into a FOL document; one re-prompt carrying the
// line-level parse errors, then FormalizationError. Partial line failures
// keep the document and record warnings.
FormalizedTurn formalize_turn(gateways::GatewayHub& hub, const std::string& formalizer_engine,
                              const Topic& topic, const DebateTurn& turn);

// strict-engine: the deterministic prover, zero network calls; llm-judge: the
// inference prompt with curly-bracket verdicts, unparseable entries Unknown.
std::vector<ConclusionVerdict> verify_document(const fol::FolDocument& doc, VerifyMode mode,
                                               gateways::GatewayHub* hub = nullptr,
                                               const std::string& judge_engine = {},
                                               std::vector<std::string>* warnings = nullptr);

// S_LV over per-round verdict lists: True verdicts / all conclusions.
// Zero denominator is an UndefinedScoreError.
double score_logical_validity(const std::vector<std::vector<fol::Verdict>>& per_round_verdicts);

struct LogicPipelineOptions {
    std::string formalizer_engine;
    std::string judge_engine;  // llm-judge mode only
    VerifyMode mode = VerifyMode::StrictEngine;
    bool allow_partial = false;
};

double score_logical_validity(gateways::GatewayHub& hub, const LogicPipelineOptions& opts,
                              const DebateTranscript& t, Role side,
                              std::vector<FormalizedTurn>* turns_out = nullptr,
                              std::vector<std::vector<ConclusionVerdict>>* verdicts_out = nullptr);

nlohmann::ordered_json formalized_turn_to_json(const FormalizedTurn& ft,
                                               const std::vector<ConclusionVerdict>& verdicts);

}  // namespace inspire::scoring
