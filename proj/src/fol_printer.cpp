#include "inspire/fol/printer.hpp"

#include <sstream>

namespace inspire::fol {

namespace {

// Precedence levels; higher binds tighter.
int prec(Op op) {
    switch (op) {
        case Op::Iff: return 1;
        case Op::Implies: return 2;
        case Op::Or:
        case Op::Xor: return 3;
        case Op::And: return 4;
        case Op::Not:
        case Op::ForAll:
        case Op::Exists: return 5;
        case Op::Atom: return 6;
    }
    return 6;
}

void print(const FormulaPtr& f, int ctx, std::string& out) {
    int p = prec(f->op);
    bool parens = p < ctx;
    if (parens) out.push_back('(');
    switch (f->op) {
        case Op::Atom: {
            out += f->predicate;
            if (!f->terms.empty()) {
                out.push_back('(');
                for (size_t i = 0; i < f->terms.size(); ++i) {
                    if (i) out += ", ";
                    out += f->terms[i].name;
                }
                out.push_back(')');
            }
            break;
        }
        case Op::Not:
            out += "¬";
            print(f->lhs, p, out);
            break;
        case Op::ForAll:
        case Op::Exists:
            out += (f->op == Op::ForAll) ? "∀" : "∃";
            out += f->var;
            out.push_back(' ');
            print(f->lhs, p, out);
            break;
        case Op::And:
            print(f->lhs, p, out);
            out += " ∧ ";
            print(f->rhs, p + 1, out);
            break;
        case Op::Or:
        case Op::Xor:
            print(f->lhs, p, out);
            out += (f->op == Op::Or) ? " ∨ " : " ⊕ ";
            print(f->rhs, p + 1, out);
            break;
        case Op::Implies:
            print(f->lhs, p + 1, out);
            out += " → ";
            print(f->rhs, p, out);
            break;
        case Op::Iff:
            print(f->lhs, p + 1, out);
            out += " ↔ ";
            print(f->rhs, p, out);
            break;
    }
    if (parens) out.push_back(')');
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
    std::string out;
    print(f, 0, out);
    return out;
}

std::string print_annotated(const AnnotatedFormula& af) {
    std::string out = print_formula(af.formula);
    if (!af.gloss.empty()) out += " ::: " + af.gloss;
    return out;
}

std::string print_document(const FolDocument& doc) {
    std::ostringstream os;
    if (!doc.predicates.empty()) {
        os << "Predicates:\n";
        for (size_t i = 0; i < doc.predicates.size(); ++i) {
            const PredicateDecl& d = doc.predicates[i];
            os << (i + 1) << ". " << d.name;
            if (d.arity > 0) {
                os << "(";
                for (int a = 0; a < d.arity; ++a) {
                    if (a) os << ", ";
                    os << static_cast<char>('x' + (a % 3));
                }
                os << ")";
            }
            if (!d.gloss.empty()) os << " ::: " << d.gloss;
            os << "\n";
        }
    }
    os << "Premises:\n";
    for (size_t i = 0; i < doc.premises.size(); ++i)
        os << (i + 1) << ". " << print_annotated(doc.premises[i]) << "\n";
    os << "Conclusions:\n";
    for (size_t i = 0; i < doc.conclusions.size(); ++i)
        os << (i + 1) << ". " << print_annotated(doc.conclusions[i]) << "\n";
    return os.str();
}

}  // namespace inspire::fol
