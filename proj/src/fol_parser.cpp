#include "inspire/fol/parser.hpp"

#include <cctype>
#include <map>

#include "inspire/util/strings.hpp"

namespace inspire::fol {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Not, And, Or, Xor, Implies, Iff, ForAll, Exists, Dot, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            size_t pos = i_;
            if (i_ >= src_.size()) {
                out.push_back({Tok::End, "", pos});
                return out;
            }
            if (match("¬") || match("~") || match("!")) { out.push_back({Tok::Not, "", pos}); continue; }
            if (match("∧") || match("&&") || match("&")) { out.push_back({Tok::And, "", pos}); continue; }
            if (match("∨") || match("||") || match("|")) { out.push_back({Tok::Or, "", pos}); continue; }
            if (match("⊕") || match("^")) { out.push_back({Tok::Xor, "", pos}); continue; }
            if (match("→") || match("->")) { out.push_back({Tok::Implies, "", pos}); continue; }
            if (match("↔") || match("<->")) { out.push_back({Tok::Iff, "", pos}); continue; }
            if (match("∀")) { out.push_back({Tok::ForAll, "", pos}); continue; }
            if (match("∃")) { out.push_back({Tok::Exists, "", pos}); continue; }
            char c = src_[i_];
            if (c == '(') { ++i_; out.push_back({Tok::LParen, "", pos}); continue; }
            if (c == ')') { ++i_; out.push_back({Tok::RParen, "", pos}); continue; }
            if (c == ',') { ++i_; out.push_back({Tok::Comma, "", pos}); continue; }
            if (c == '.') { ++i_; out.push_back({Tok::Dot, "", pos}); continue; }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                size_t start = i_;
                while (i_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                    ++i_;
                std::string word = src_.substr(start, i_ - start);
                if (word == "forall") { out.push_back({Tok::ForAll, "", pos}); continue; }
                if (word == "exists") { out.push_back({Tok::Exists, "", pos}); continue; }
                out.push_back({Tok::Ident, word, pos});
                continue;
            }
            throw ParseError("unknown token '" + std::string(1, c) + "'", pos);
        }
    }

private:
    void skip_ws() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    }
    bool match(const char* s) {
        size_t n = std::char_traits<char>::length(s);
        if (src_.compare(i_, n, s) == 0) {
            i_ += n;
            return true;
        }
        return false;
    }

    const std::string& src_;
    size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    FormulaPtr run() {
        FormulaPtr f = parse_iff();
        if (peek().kind != Tok::End) {
            if (peek().kind == Tok::RParen) throw ParseError("unbalanced parentheses", peek().pos);
            throw ParseError("unexpected trailing input", peek().pos);
        }
        return f;
    }

private:
    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(Tok kind, const char* what) {
        if (!accept(kind)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    FormulaPtr parse_iff() {
        FormulaPtr a = parse_impl();
        if (accept(Tok::Iff)) return iff(a, parse_iff());
        return a;
    }

    FormulaPtr parse_impl() {
        FormulaPtr a = parse_or();
        if (accept(Tok::Implies)) return implies(a, parse_impl());
        return a;
    }

    FormulaPtr parse_or() {
        FormulaPtr a = parse_and();
        while (true) {
            if (accept(Tok::Or)) a = disj(a, parse_and());
            else if (accept(Tok::Xor)) a = exclusive(a, parse_and());
            else return a;
        }
    }

    FormulaPtr parse_and() {
        FormulaPtr a = parse_unary();
        while (accept(Tok::And)) a = conj(a, parse_unary());
        return a;
    }

    FormulaPtr parse_unary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Not:
                take();
                return negate(parse_unary());
            case Tok::ForAll:
            case Tok::Exists: {
                Token q = take();
                if (peek().kind != Tok::Ident)
                    throw ParseError("expected quantified variable", peek().pos);
                Token v = take();
                if (!std::islower(static_cast<unsigned char>(v.text[0])))
                    throw ParseError("quantified variable must start lowercase: " + v.text, v.pos);
                accept(Tok::Dot);
                FormulaPtr body = parse_unary();
                bool used = false;
                for (const std::string& fv : free_variables(body))
                    if (fv == v.text) used = true;
                if (!used)
                    throw ParseError("quantified variable '" + v.text + "' does not occur in body", v.pos);
                return q.kind == Tok::ForAll ? forall(v.text, body) : exists(v.text, body);
            }
            case Tok::LParen: {
                take();
                FormulaPtr f = parse_iff();
                if (!accept(Tok::RParen)) throw ParseError("unbalanced parentheses", peek().pos);
                return f;
            }
            case Tok::Ident:
                return parse_atom();
            case Tok::RParen:
                throw ParseError("unbalanced parentheses", t.pos);
            default:
                throw ParseError("expected formula", t.pos);
        }
    }

    FormulaPtr parse_atom() {
        Token name = take();
        if (!accept(Tok::LParen)) return atom(name.text);  // 0-ary proposition
        std::vector<Term> terms;
        if (peek().kind != Tok::RParen) {
            while (true) {
                if (peek().kind != Tok::Ident) throw ParseError("expected term", peek().pos);
                terms.push_back(make_term(take().text));
                if (!accept(Tok::Comma)) break;
            }
        }
        if (!accept(Tok::RParen)) throw ParseError("unbalanced parentheses", peek().pos);
        return atom(name.text, std::move(terms));
    }

    std::vector<Token> toks_;
    size_t i_ = 0;
};

// Strips "1.", "2)", "-", "*", "•" enumeration prefixes from a content line.
std::string strip_enumeration(const std::string& line) {
    std::string s = util::trim(line);
    if (s.rfind("•", 0) == 0) return util::trim(s.substr(std::string("•").size()));
    if (!s.empty() && (s[0] == '-' || s[0] == '*')) return util::trim(s.substr(1));
    size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > 0 && i < s.size() && (s[i] == '.' || s[i] == ')')) return util::trim(s.substr(i + 1));
    return s;
}

// Matches a section header line like "Premises:" (tolerating markdown
// decoration); returns empty string when the line is not a header.
std::string header_of(const std::string& line) {
    std::string s = util::trim(line);
    size_t b = 0, e = s.size();
    while (b < e && !std::isalpha(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && !std::isalpha(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string word = util::to_lower(s.substr(b, e - b));
    if (word == "predicates" || word == "premises" || word == "conclusions") return word;
    return "";
}

}  // namespace

AnnotatedFormula parse_formula(const std::string& text) {
    std::string body = text;
    std::string gloss;
    size_t sep = text.find(":::");
    if (sep != std::string::npos) {
        body = text.substr(0, sep);
        gloss = util::trim(text.substr(sep + 3));
    }
    if (util::trim(body).empty()) throw ParseError("empty formula", 0);
    Parser parser(Lexer(body).run());
    FormulaPtr f = expand_xor(parser.run());
    return AnnotatedFormula{f, gloss};
}

FolDocument parse_document(const std::string& text) {
    FolDocument doc;
    std::string section;
    bool saw_conclusions = false;
    std::map<std::string, int> arity;  // first use or declaration wins

    auto declare = [&](const std::string& name, int n) -> bool {
        auto it = arity.find(name);
        if (it == arity.end()) {
            arity[name] = n;
            return true;
        }
        return it->second == n;
    };
    auto check_arity = [&](const FormulaPtr& f, const auto& self) -> std::string {
        switch (f->op) {
            case Op::Atom:
                if (!declare(f->predicate, static_cast<int>(f->terms.size())))
                    return "predicate " + f->predicate + " used with arity " +
                           std::to_string(f->terms.size()) + " but declared with arity " +
                           std::to_string(arity[f->predicate]);
                return "";
            case Op::Not:
            case Op::ForAll:
            case Op::Exists:
                return self(f->lhs, self);
            default: {
                std::string err = self(f->lhs, self);
                if (!err.empty()) return err;
                return self(f->rhs, self);
            }
        }
    };

    std::vector<std::string> lines = util::split_lines(text);
    for (size_t li = 0; li < lines.size(); ++li) {
        const std::string& raw = lines[li];
        std::string head = header_of(raw);
        if (!head.empty()) {
            section = head;
            if (head == "conclusions") saw_conclusions = true;
            continue;
        }
        if (section.empty()) continue;  // preamble prose
        std::string content = strip_enumeration(raw);
        if (content.empty()) continue;
        int line_no = static_cast<int>(li + 1);
        if (section == "predicates") {
            try {
                AnnotatedFormula af = parse_formula(content);
                if (af.formula->op != Op::Atom)
                    throw ParseError("predicate declaration must be a single atom", 0);
                if (!declare(af.formula->predicate, static_cast<int>(af.formula->terms.size())))
                    throw ParseError("conflicting arity for " + af.formula->predicate, 0);
                doc.predicates.push_back(PredicateDecl{af.formula->predicate,
                                                       static_cast<int>(af.formula->terms.size()),
                                                       af.gloss});
            } catch (const ParseError& e) {
                doc.issues.push_back({section, line_no, raw, e.what()});
            }
            continue;
        }
        try {
            AnnotatedFormula af = parse_formula(content);
            std::string arity_err = check_arity(af.formula, check_arity);
            if (!arity_err.empty()) {
                doc.issues.push_back({section, line_no, raw, arity_err});
                continue;
            }
            if (section == "premises") doc.premises.push_back(std::move(af));
            else doc.conclusions.push_back(std::move(af));
        } catch (const ParseError& e) {
            doc.issues.push_back({section, line_no, raw, e.what()});
        }
    }

    if (!saw_conclusions) throw DocumentError("document has no Conclusions section");

    // Auto-declare predicates used without a declaration line.
    for (const auto& [name, n] : arity) {
        bool declared = false;
        for (const PredicateDecl& d : doc.predicates)
            if (d.name == name) declared = true;
        if (!declared) doc.predicates.push_back(PredicateDecl{name, n, ""});
    }
    return doc;
}

}  // namespace inspire::fol
