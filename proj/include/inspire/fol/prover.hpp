#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inspire/fol/ast.hpp"

namespace inspire::fol {

enum class Verdict { True, False, Unknown };

const char* to_string(Verdict v);

struct ProofStep {
    std::string formula;           // canonical text
    std::string rule;              // "premise", "assumption", "modus-ponens", ...
    std::string label;             // e.g. "Premise 2" for premise leaves
    std::vector<int> antecedents;  // indices of earlier steps
};

struct Derivation {
    std::vector<ProofStep> steps;
};

struct EvalOptions {
    int step_cap = 10000;    // derived-formula budget per conclusion
    int max_constants = 24;  // skolem/fresh constant budget
};

struct EvalResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<Derivation> derivation;  // present whenever verdict != Unknown
    bool inconsistent_premises = false;
};

class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class UnsupportedFragmentError : public Error {
public:
    using Error::Error;
};

// Forward chaining to fixpoint over the premise set (universal instantiation,
// modus ponens, modus tollens, and-introduction/elimination, or-introduction,
// disjunctive syllogism, iff-elimination, double-negation elimination), with
// conditional proof for implication and universal conclusions and ground
// witnesses for existential ones. Free variables are implicitly universally
// quantified. True if derived; False if the negation is derived or the
// premise closure is inconsistent with the conclusion; Unknown otherwise.
// Inconsistent premise sets do not explode: the flag is reported and False
// requires a direct contradiction.
EvalResult evaluate_conclusion(const FolDocument& doc, const AnnotatedFormula& conclusion,
                               const EvalOptions& opts = {});

}  // namespace inspire::fol
