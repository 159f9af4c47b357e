#pragma once

#include <memory>
#include <string>
#include <vector>

#include "inspire/core/errors.hpp"

namespace inspire::fol {

enum class TermKind { Variable, Constant };

struct Term {
    TermKind kind = TermKind::Variable;
    std::string name;
    bool operator==(const Term&) const = default;
};

// Case of the first letter decides variable vs constant; validates the
// identifier charset [A-Za-z][A-Za-z0-9_]*.
Term make_term(const std::string& name);

enum class Op { Atom, Not, And, Or, Xor, Implies, Iff, ForAll, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    Op op = Op::Atom;
    std::string predicate;    // Atom
    std::vector<Term> terms;  // Atom
    std::string var;          // ForAll / Exists
    FormulaPtr lhs;           // Not and quantifiers use lhs only
    FormulaPtr rhs;
};

FormulaPtr atom(std::string predicate, std::vector<Term> terms = {});
FormulaPtr negate(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr exclusive(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Negation with double-negation collapse: neg(¬G) = G, neg(F) = ¬F.
FormulaPtr neg_normalized(const FormulaPtr& f);

std::vector<std::string> free_variables(const FormulaPtr& f);
std::vector<std::string> constants_in(const FormulaPtr& f);

// Capture-free substitution of a free variable by a term.
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& value);

// Maximum number of quantifiers along any root-to-leaf path.
int quantifier_depth(const FormulaPtr& f);

// Expands every Xor node into (a ∨ b) ∧ ¬(a ∧ b); applied by the parser.
FormulaPtr expand_xor(const FormulaPtr& f);

struct AnnotatedFormula {
    FormulaPtr formula;
    std::string gloss;  // text after ":::", no logical weight
};

struct PredicateDecl {
    std::string name;
    int arity = 0;
    std::string gloss;
};

struct ParseIssue {
    std::string section;  // "predicates" | "premises" | "conclusions"
    int line = 0;         // 1-based line number in the source text
    std::string text;     // the unparseable line, retained verbatim
    std::string message;
};

struct FolDocument {
    std::vector<PredicateDecl> predicates;
    std::vector<AnnotatedFormula> premises;
    std::vector<AnnotatedFormula> conclusions;
    std::vector<ParseIssue> issues;
};

}  // namespace inspire::fol
