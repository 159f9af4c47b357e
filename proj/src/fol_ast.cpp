#include "inspire/fol/ast.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace inspire::fol {

static bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

Term make_term(const std::string& name) {
    if (!valid_identifier(name)) throw ValidationError("invalid term identifier: " + name);
    TermKind kind = std::islower(static_cast<unsigned char>(name[0])) ? TermKind::Variable
                                                                      : TermKind::Constant;
    return Term{kind, name};
}

static FormulaPtr node(Op op, FormulaPtr lhs, FormulaPtr rhs, std::string var = {}) {
    auto f = std::make_shared<Formula>();
    f->op = op;
    f->lhs = std::move(lhs);
    f->rhs = std::move(rhs);
    f->var = std::move(var);
    return f;
}

FormulaPtr atom(std::string predicate, std::vector<Term> terms) {
    auto f = std::make_shared<Formula>();
    f->op = Op::Atom;
    f->predicate = std::move(predicate);
    f->terms = std::move(terms);
    return f;
}

FormulaPtr negate(FormulaPtr f) { return node(Op::Not, std::move(f), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) { return node(Op::And, std::move(a), std::move(b)); }
FormulaPtr disj(FormulaPtr a, FormulaPtr b) { return node(Op::Or, std::move(a), std::move(b)); }
FormulaPtr exclusive(FormulaPtr a, FormulaPtr b) { return node(Op::Xor, std::move(a), std::move(b)); }
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return node(Op::Implies, std::move(a), std::move(b)); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return node(Op::Iff, std::move(a), std::move(b)); }
FormulaPtr forall(std::string var, FormulaPtr body) {
    return node(Op::ForAll, std::move(body), nullptr, std::move(var));
}
FormulaPtr exists(std::string var, FormulaPtr body) {
    return node(Op::Exists, std::move(body), nullptr, std::move(var));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op) return false;
    switch (a->op) {
        case Op::Atom:
            return a->predicate == b->predicate && a->terms == b->terms;
        case Op::Not:
            return equal(a->lhs, b->lhs);
        case Op::ForAll:
        case Op::Exists:
            return a->var == b->var && equal(a->lhs, b->lhs);
        default:
            return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

FormulaPtr neg_normalized(const FormulaPtr& f) {
    if (f->op == Op::Not) return f->lhs;
    return negate(f);
}

static void collect_free(const FormulaPtr& f, std::set<std::string>& bound,
                         std::vector<std::string>& out) {
    switch (f->op) {
        case Op::Atom:
            for (const Term& t : f->terms)
                if (t.kind == TermKind::Variable && !bound.count(t.name) &&
                    std::find(out.begin(), out.end(), t.name) == out.end())
                    out.push_back(t.name);
            return;
        case Op::Not:
            collect_free(f->lhs, bound, out);
            return;
        case Op::ForAll:
        case Op::Exists: {
            bool inserted = bound.insert(f->var).second;
            collect_free(f->lhs, bound, out);
            if (inserted) bound.erase(f->var);
            return;
        }
        default:
            collect_free(f->lhs, bound, out);
            collect_free(f->rhs, bound, out);
            return;
    }
}

std::vector<std::string> free_variables(const FormulaPtr& f) {
    std::set<std::string> bound;
    std::vector<std::string> out;
    collect_free(f, bound, out);
    return out;
}

static void collect_constants(const FormulaPtr& f, std::vector<std::string>& out) {
    switch (f->op) {
        case Op::Atom:
            for (const Term& t : f->terms)
                if (t.kind == TermKind::Constant &&
                    std::find(out.begin(), out.end(), t.name) == out.end())
                    out.push_back(t.name);
            return;
        case Op::Not:
        case Op::ForAll:
        case Op::Exists:
            collect_constants(f->lhs, out);
            return;
        default:
            collect_constants(f->lhs, out);
            collect_constants(f->rhs, out);
            return;
    }
}

std::vector<std::string> constants_in(const FormulaPtr& f) {
    std::vector<std::string> out;
    collect_constants(f, out);
    return out;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& value) {
    switch (f->op) {
        case Op::Atom: {
            bool hit = false;
            for (const Term& t : f->terms)
                if (t.kind == TermKind::Variable && t.name == var) hit = true;
            if (!hit) return f;
            std::vector<Term> terms = f->terms;
            for (Term& t : terms)
                if (t.kind == TermKind::Variable && t.name == var) t = value;
            return atom(f->predicate, std::move(terms));
        }
        case Op::Not:
            return negate(substitute(f->lhs, var, value));
        case Op::ForAll:
        case Op::Exists: {
            if (f->var == var) return f;  // shadowed
            FormulaPtr body = substitute(f->lhs, var, value);
            if (body == f->lhs) return f;
            return node(f->op, std::move(body), nullptr, f->var);
        }
        default: {
            FormulaPtr l = substitute(f->lhs, var, value);
            FormulaPtr r = substitute(f->rhs, var, value);
            if (l == f->lhs && r == f->rhs) return f;
            return node(f->op, std::move(l), std::move(r));
        }
    }
}

int quantifier_depth(const FormulaPtr& f) {
    switch (f->op) {
        case Op::Atom:
            return 0;
        case Op::Not:
            return quantifier_depth(f->lhs);
        case Op::ForAll:
        case Op::Exists:
            return 1 + quantifier_depth(f->lhs);
        default:
            return std::max(quantifier_depth(f->lhs), quantifier_depth(f->rhs));
    }
}

FormulaPtr expand_xor(const FormulaPtr& f) {
    switch (f->op) {
        case Op::Atom:
            return f;
        case Op::Not: {
            FormulaPtr body = expand_xor(f->lhs);
            return body == f->lhs ? f : negate(body);
        }
        case Op::ForAll:
        case Op::Exists: {
            FormulaPtr body = expand_xor(f->lhs);
            return body == f->lhs ? f : node(f->op, std::move(body), nullptr, f->var);
        }
        case Op::Xor: {
            FormulaPtr a = expand_xor(f->lhs);
            FormulaPtr b = expand_xor(f->rhs);
            return conj(disj(a, b), negate(conj(a, b)));
        }
        default: {
            FormulaPtr l = expand_xor(f->lhs);
            FormulaPtr r = expand_xor(f->rhs);
            if (l == f->lhs && r == f->rhs) return f;
            return node(f->op, std::move(l), std::move(r));
        }
    }
}

}  // namespace inspire::fol
