#pragma once

#include <string>

#include "inspire/fol/ast.hpp"

namespace inspire::fol {

class ParseError : public Error {
public:
    ParseError(const std::string& what, size_t position)
        : Error(what + " at offset " + std::to_string(position)), position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

// Document-level fault (e.g. no Conclusions section).
class DocumentError : public Error {
public:
    using Error::Error;
};

// Parses one formula line. Unicode connectives and their ASCII aliases
// (¬ ~ !, ∧ &, ∨ |, ⊕ ^, → ->, ↔ <->, ∀ forall, ∃ exists); precedence
// ¬ > ∧ > ∨ = ⊕ > → > ↔ with → and ↔ right-associative. Text after ":::"
// becomes the gloss. ⊕ is rewritten to (a ∨ b) ∧ ¬(a ∧ b) on the way out.
AnnotatedFormula parse_formula(const std::string& text);

// Splits on the Predicates/Premises/Conclusions headers (numbered or bulleted
// lines) and parses each line. A missing Predicates section is tolerated
// (predicates are declared on first use); a missing Conclusions section
// throws DocumentError. Line-level failures are recorded in issues with the
// offending line retained.
FolDocument parse_document(const std::string& text);

}  // namespace inspire::fol
