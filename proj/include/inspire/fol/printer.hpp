#pragma once

#include <string>

#include "inspire/fol/ast.hpp"

namespace inspire::fol {

// Minimal-parentheses Unicode rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const FormulaPtr& f);
std::string print_annotated(const AnnotatedFormula& af);

// Predicates/Premises/Conclusions layout with "N." numbering and ":::" glosses.
std::string print_document(const FolDocument& doc);

}  // namespace inspire::fol
