#include "inspire/scoring/logic.hpp"

#include <algorithm>
#include <cctype>

#include "inspire/fol/printer.hpp"
#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::scoring {

namespace {

const char* kFormalizeSystemPrompt =
    "Task: Logical Formalization\n\n"
    "Input:\n"
    "<Reasoning and Analysis Process>: Provide a step-by-step analysis leading to the "
    "formulation of the argument.\n"
    "<Argument>: Summarize the primary argument derived from the analysis.\n\n"
    "Output:\n"
    "Convert Reasoning and Argument to First-Order Logic (FOL): Transform reasoning statements "
    "into formalized logic expressions using the following rules:\n"
    "- Conjunction (logical AND): expr1 ∧ expr2\n"
    "- Disjunction (logical OR): expr1 ∨ expr2\n"
    "- Exclusive Disjunction: expr1 ⊕ expr2\n"
    "- Negation (NOT): ¬ expr1\n"
    "- Implication: expr1 → expr2\n"
    "- Biconditional (if and only if): expr1 ↔ expr2\n"
    "- Universal Quantification: ∀x\n"
    "- Existential Quantification: ∃x\n\n"
    "Structure the output as three sections titled 'Predicates:', 'Premises:' and "
    "'Conclusions:', one numbered expression per line, each followed by ::: and its natural "
    "language meaning.";

const char* kInferenceSystemPrompt =
    "Task: Logical Inference and Validity Evaluation\n"
    "Solve Logic Puzzle: Determine the truth value (true, false, unknown) of each conclusion "
    "based on the premises and logical inferences.\n\n"
    "Make sure you carefully and fully understand the below requirements before execution the "
    "conclusion:\n"
    "1. Please clearly indicate whether the conclusion statement is true, false or unknown "
    "using curly bracket {true/false/unknown}!!! The answer will only be either true, false or "
    "unknown. The definition of the three options are:\n\n"
    "True: A statement is \"true\" if it necessarily follows from the given premises using "
    "logical rules.\n"
    "False: A statement is \"false\" if it is contradicted by the premises or its negation is "
    "logically inferred from them.\n"
    "Unknown: A statement is \"unknown\" if there is insufficient information in the premises "
    "to determine its truth value conclusively.\n\n"
    "2. Make sure you must only use the premises to infer the conclusion. Do not use any "
    "information that is not exist or cannot be inferred from the premises. If some premise is "
    "semantically equal, such as \"love the most\" and \"favorite\", you can consider this as a "
    "valid assumption. You can make assumption to entity if it is very obvious but not logical "
    "relationship. For instance, an entity with an obvious human name can be inferred as a "
    "human.\n\n"
    "3. Make sure you abide the first-order logic rules and formula when making logical "
    "inference. You need to clearly indicate what logic rules and formula you used.\n\n"
    "4. Please note that in first-order logic if there exists a conditional statement in the "
    "conclusion such as \"If...\", the if part will be considered as a premise. And if there is "
    "premise contradicts the if statement, you need to use the premise in the if statement as "
    "priority and neglect the contradicted one.\n\n"
    "5. Be careful with the parentheses. Make sure you following the rules such as Order of "
    "Operations (The order is usually: negation (¬), conjunction (and, ∧), disjunction (or, "
    "∨), implication (→), and biconditional (↔).), Nested Parentheses (The expression inside "
    "the innermost set of parentheses is evaluated first, then the next outer set, and so "
    "on.).\n\n"
    "6. Make sure you not only access the premises in first-order logic, but also access its "
    "corresponding natural language format. The natural language format premises should be "
    "prioritized when there is inconsistent between natural language and first-order logic.\n\n"
    "7. When inferring new knowledge, please clear indicate which premises you used or the "
    "steps you refer to. For instance, if you use Premise 1 and a knowledge from Step 5, you "
    "should clearly indicate that \"Combine Premise 1 and Step 5\".\n\n"
    "8. You should also use natural language to explain the logical process in each step. "
    "Please also indicate the premises and steps you refer to when making the logical process.";

std::string debate_text(const DebateTurn& turn) {
    if (turn.reasoning.empty()) return turn.argument;
    return turn.reasoning + "\n" + turn.argument;
}

struct DocParse {
    std::optional<fol::FolDocument> doc;
    std::string error;
};

DocParse try_parse_document(const std::string& reply) {
    DocParse out;
    try {
        fol::FolDocument doc = fol::parse_document(reply);
        if (doc.conclusions.empty()) {
            std::string detail;
            for (const fol::ParseIssue& issue : doc.issues)
                if (issue.section == "conclusions")
                    detail += "\n  line " + std::to_string(issue.line) + ": " + issue.message;
            out.error = "no well-formed conclusion parsed" + detail;
            return out;
        }
        out.doc = std::move(doc);
    } catch (const fol::DocumentError& e) {
        out.error = e.what();
    }
    return out;
}

// "Conclusion 3: ... {true}" anchored scan, with an ordered fallback over all
// curly-bracket verdicts.
std::vector<std::optional<fol::Verdict>> parse_brace_verdicts(const std::string& reply, size_t n) {
    std::string low = util::to_lower(reply);
    auto verdict_at = [&](size_t from, size_t to) -> std::optional<fol::Verdict> {
        size_t brace = low.find('{', from);
        while (brace != std::string::npos && brace < to) {
            size_t close = low.find('}', brace);
            if (close == std::string::npos) return std::nullopt;
            std::string token = util::trim(low.substr(brace + 1, close - brace - 1));
            if (token == "true") return fol::Verdict::True;
            if (token == "false") return fol::Verdict::False;
            if (token == "unknown") return fol::Verdict::Unknown;
            brace = low.find('{', close);
        }
        return std::nullopt;
    };

    std::vector<std::optional<fol::Verdict>> out(n);
    for (size_t i = 0; i < n; ++i) {
        std::string anchor = "conclusion " + std::to_string(i + 1);
        size_t pos = low.find(anchor);
        if (pos == std::string::npos) continue;
        size_t next = low.find("conclusion ", pos + anchor.size());
        out[i] = verdict_at(pos, next == std::string::npos ? low.size() : next);
    }
    if (std::all_of(out.begin(), out.end(), [](const auto& v) { return !v.has_value(); })) {
        // Ordered fallback: first n brace verdicts in reply order.
        size_t pos = 0;
        for (size_t i = 0; i < n; ++i) {
            auto v = verdict_at(pos, low.size());
            if (!v) break;
            out[i] = v;
            size_t brace = low.find('{', pos);
            pos = (brace == std::string::npos) ? low.size() : low.find('}', brace) + 1;
        }
    }
    return out;
}

}  // namespace

const char* to_string(VerifyMode mode) {
    return mode == VerifyMode::StrictEngine ? "strict-engine" : "llm-judge";
}

std::string render_formalization_system_prompt() { return kFormalizeSystemPrompt; }
std::string render_inference_system_prompt() { return kInferenceSystemPrompt; }

FormalizedTurn formalize_turn(gateways::GatewayHub& hub, const std::string& formalizer_engine,
                              const Topic& topic, const DebateTurn& turn) {
    if (util::trim(turn.reasoning).empty() && util::trim(turn.argument).empty())
        throw ValidationError("formalize_turn needs non-empty reasoning or argument");

    gateways::ChatRequest req;
    req.engine = formalizer_engine;
    req.temperature = 0.0;
    req.max_tokens = 1024;
    req.messages = {{"system", kFormalizeSystemPrompt},
                    {"user", "Topic: " + topic.statement + "\nDebate Text: " + debate_text(turn) +
                                 "\n\nConvert the reasoning and argument into first-order logic "
                                 "expressions following the given instructions."}};

    std::string reply = hub.chat(req);
    DocParse first = try_parse_document(reply);
    if (!first.doc) {
        gateways::ChatRequest retry = req;
        retry.sample_tag = "formalize-retry";
        retry.messages.push_back(
            {"user", "Your previous output could not be parsed: " + first.error +
                         "\nEmit the three sections again with one well-formed expression per "
                         "numbered line."});
        reply = hub.chat(retry);
        DocParse second = try_parse_document(reply);
        if (!second.doc)
            throw FormalizationError("formalization failed after re-prompt: " + second.error);
        first = std::move(second);
    }

    FormalizedTurn ft;
    ft.round_index = turn.round_index;
    ft.role = turn.role;
    ft.document = std::move(*first.doc);
    ft.raw_formalization = reply;
    for (const fol::ParseIssue& issue : ft.document.issues) {
        ft.warnings.push_back(issue.section + " line " + std::to_string(issue.line) +
                              " unparseable: " + issue.message);
        util::log_warn("formalization kept with issue: ", ft.warnings.back());
    }
    return ft;
}

std::vector<ConclusionVerdict> verify_document(const fol::FolDocument& doc, VerifyMode mode,
                                               gateways::GatewayHub* hub,
                                               const std::string& judge_engine,
                                               std::vector<std::string>* warnings) {
    std::vector<ConclusionVerdict> out;
    if (mode == VerifyMode::StrictEngine) {
        for (const fol::AnnotatedFormula& c : doc.conclusions) {
            ConclusionVerdict cv;
            cv.conclusion = fol::print_formula(c.formula);
            try {
                fol::EvalResult r = fol::evaluate_conclusion(doc, c);
                cv.verdict = r.verdict;
                cv.derivation = r.derivation;
                if (r.inconsistent_premises && warnings)
                    warnings->push_back("premise set inconsistent while evaluating " +
                                        cv.conclusion);
            } catch (const fol::ResourceLimitError& e) {
                cv.verdict = fol::Verdict::Unknown;
                if (warnings) warnings->push_back(std::string("resource limit: ") + e.what());
            } catch (const fol::UnsupportedFragmentError& e) {
                cv.verdict = fol::Verdict::Unknown;
                if (warnings) warnings->push_back(std::string("unsupported fragment: ") + e.what());
            }
            out.push_back(std::move(cv));
        }
        return out;
    }

    if (!hub) throw ValidationError("llm-judge mode needs a gateway hub");
    gateways::ChatRequest req;
    req.engine = judge_engine;
    req.temperature = 0.0;
    req.max_tokens = 1024;
    req.messages = {{"system", kInferenceSystemPrompt},
                    {"user", "Input: " + fol::print_document(doc) +
                                 "\nTask: Evaluate whether each conclusion logically follows "
                                 "from the premises and classify them as true, false, or "
                                 "unknown. Provide reasoning for each classification."}};

    size_t n = doc.conclusions.size();
    auto verdicts = parse_brace_verdicts(hub->chat(req), n);
    bool any = std::any_of(verdicts.begin(), verdicts.end(),
                           [](const auto& v) { return v.has_value(); });
    if (!any) {
        gateways::ChatRequest retry = req;
        retry.sample_tag = "inference-retry";
        retry.messages.push_back(
            {"user", "For each conclusion output exactly one line: Conclusion <n>: "
                     "{true/false/unknown}."});
        verdicts = parse_brace_verdicts(hub->chat(retry), n);
    }
    for (size_t i = 0; i < n; ++i) {
        ConclusionVerdict cv;
        cv.conclusion = fol::print_formula(doc.conclusions[i].formula);
        cv.verdict = verdicts[i].value_or(fol::Verdict::Unknown);
        if (!verdicts[i] && warnings)
            warnings->push_back("no parseable verdict for conclusion " + std::to_string(i + 1) +
                                "; defaulted to unknown");
        out.push_back(std::move(cv));
    }
    return out;
}

double score_logical_validity(const std::vector<std::vector<fol::Verdict>>& per_round_verdicts) {
    long correct = 0, total = 0;
    for (const auto& round : per_round_verdicts) {
        for (fol::Verdict v : round) {
            ++total;
            if (v == fol::Verdict::True) ++correct;
        }
    }
    if (total == 0)
        throw UndefinedScoreError("logical-validity denominator is zero (no conclusions)");
    return static_cast<double>(correct) / static_cast<double>(total);
}

double score_logical_validity(gateways::GatewayHub& hub, const LogicPipelineOptions& opts,
                              const DebateTranscript& t, Role side,
                              std::vector<FormalizedTurn>* turns_out,
                              std::vector<std::vector<ConclusionVerdict>>* verdicts_out) {
    std::vector<std::vector<fol::Verdict>> rounds;
    for (const DebateTurn& turn : t.turns) {
        if (turn.role != side) continue;
        FormalizedTurn ft;
        try {
            ft = formalize_turn(hub, opts.formalizer_engine, t.topic, turn);
        } catch (const FormalizationError& e) {
            // A failed formalization leaves nothing derivable: the turn
            // contributes no True verdicts and no conclusion count.
            util::log_warn("turn contributes no conclusions (round ", turn.round_index, ", ",
                           to_string(side), "): ", e.what());
            continue;
        }
        ft.mode_used = to_string(opts.mode);
        std::vector<ConclusionVerdict> cvs =
            verify_document(ft.document, opts.mode, &hub, opts.judge_engine, &ft.warnings);

        std::vector<fol::Verdict> round;
        for (const ConclusionVerdict& cv : cvs) round.push_back(cv.verdict);
        // Unparseable conclusion lines still count toward the denominator.
        for (const fol::ParseIssue& issue : ft.document.issues) {
            if (issue.section != "conclusions") continue;
            round.push_back(fol::Verdict::Unknown);
            ConclusionVerdict cv;
            cv.conclusion = issue.text;
            cv.verdict = fol::Verdict::Unknown;
            cvs.push_back(std::move(cv));
        }
        rounds.push_back(std::move(round));
        if (turns_out) turns_out->push_back(std::move(ft));
        if (verdicts_out) verdicts_out->push_back(std::move(cvs));
    }
    return score_logical_validity(rounds);
}

nlohmann::ordered_json formalized_turn_to_json(const FormalizedTurn& ft,
                                               const std::vector<ConclusionVerdict>& verdicts) {
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const ConclusionVerdict& cv : verdicts) {
        nlohmann::ordered_json v{{"conclusion", cv.conclusion},
                                 {"verdict", fol::to_string(cv.verdict)}};
        if (cv.derivation) {
            nlohmann::ordered_json steps = nlohmann::ordered_json::array();
            for (const fol::ProofStep& s : cv.derivation->steps)
                steps.push_back({{"formula", s.formula},
                                 {"rule", s.rule},
                                 {"label", s.label},
                                 {"antecedents", s.antecedents}});
            v["derivation"] = steps;
        }
        vs.push_back(std::move(v));
    }
    return nlohmann::ordered_json{{"schema", "inspire/formalized-turn/v1"},
                                  {"round", ft.round_index},
                                  {"side", to_string(ft.role)},
                                  {"mode", ft.mode_used},
                                  {"document", fol::print_document(ft.document)},
                                  {"raw", ft.raw_formalization},
                                  {"verdicts", vs},
                                  {"warnings", ft.warnings}};
}

}  // namespace inspire::scoring
