#include "inspire/fol/prover.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>

#include "inspire/fol/printer.hpp"

namespace inspire::fol {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

namespace {

struct ProofNode;
using ProofPtr = std::shared_ptr<ProofNode>;

struct ProofNode {
    FormulaPtr f;
    std::string rule;
    std::string label;
    std::vector<ProofPtr> children;
};

ProofPtr make_node(FormulaPtr f, std::string rule, std::vector<ProofPtr> children = {},
                   std::string label = {}) {
    auto n = std::make_shared<ProofNode>();
    n->f = std::move(f);
    n->rule = std::move(rule);
    n->label = std::move(label);
    n->children = std::move(children);
    return n;
}

struct Budget {
    int steps;
    int constants;
};

struct Fact {
    FormulaPtr f;
    std::string key;
    std::string rule;
    std::string label;
    std::vector<int> parents;
};

// Instantiation template: formula with instantiable variables (outer
// quantifier prefix or implicit universals of the source).
struct Template {
    std::vector<std::string> vars;
    FormulaPtr body;
    int parent = -1;  // fact index for universal-instantiation provenance
};

FormulaPtr strip_forall_prefix(FormulaPtr f, std::vector<std::string>& vars) {
    while (f->op == Op::ForAll) {
        vars.push_back(f->var);
        f = f->lhs;
    }
    return f;
}

class Chainer {
public:
    explicit Chainer(Budget* budget) : budget_(budget) {}

    const std::vector<std::string>& constants() const { return constants_; }
    bool has_contradiction() const { return contradiction_.has_value(); }
    std::pair<int, int> contradiction_pair() const { return *contradiction_; }

    void add_constant(const std::string& name) {
        if (constant_set_.insert(name).second) {
            constants_.push_back(name);
            needs_refresh_ = true;
        }
    }

    std::string fresh_constant(const std::string& prefix) {
        if (--budget_->constants < 0) throw ResourceLimitError("constant budget exceeded");
        for (int n = 1;; ++n) {
            std::string name = prefix + std::to_string(n);
            if (!constant_set_.count(name)) return name;
        }
    }

    // Adds a premise/assumption root: implicit universals wrapped, Xor
    // expanded, constants and intro-rule targets registered.
    int add_root(const FormulaPtr& raw, const std::string& rule, const std::string& label) {
        FormulaPtr f = expand_xor(raw);
        for (const std::string& c : constants_in(f)) add_constant(c);
        std::vector<std::string> fv = free_variables(f);
        for (auto it = fv.rbegin(); it != fv.rend(); ++it) f = forall(*it, f);
        register_universe(f);
        return insert(f, rule, {}, label);
    }

    std::optional<int> find(const FormulaPtr& f) const {
        auto it = index_.find(print_formula(f));
        return it == index_.end() ? std::nullopt : std::optional<int>(it->second);
    }

    void saturate() {
        refresh_instantiations();
        while (!queue_.empty()) {
            int idx = queue_.front();
            queue_.pop_front();
            process(idx);
            if (queue_.empty() && needs_refresh_) refresh_instantiations();
        }
    }

    ProofPtr prove_fact(int idx) {
        auto it = proof_memo_.find(idx);
        if (it != proof_memo_.end()) return it->second;
        const Fact& fact = facts_[idx];
        auto node = make_node(fact.f, fact.rule, {}, fact.label);
        for (int p : fact.parents) node->children.push_back(prove_fact(p));
        proof_memo_[idx] = node;
        return node;
    }

    // Goal-directed derivability on top of the saturated closure; conditional
    // proof clones the chainer so assumptions stay scoped.
    std::optional<ProofPtr> derive(const FormulaPtr& goal, int depth) {
        if (depth > 16) return std::nullopt;
        saturate();
        if (auto idx = find(goal)) return prove_fact(*idx);
        switch (goal->op) {
            case Op::And: {
                auto a = derive(goal->lhs, depth + 1);
                if (!a) break;
                auto b = derive(goal->rhs, depth + 1);
                if (!b) break;
                return make_node(goal, "and-introduction", {*a, *b});
            }
            case Op::Or: {
                if (auto a = derive(goal->lhs, depth + 1))
                    return make_node(goal, "or-introduction", {*a});
                if (auto b = derive(goal->rhs, depth + 1))
                    return make_node(goal, "or-introduction", {*b});
                break;
            }
            case Op::Implies: {
                Chainer cp(*this);
                cp.add_root(goal->lhs, "assumption", "assumption");
                if (auto sub = cp.derive(goal->rhs, depth + 1))
                    return make_node(goal, "conditional-proof", {*sub});
                break;
            }
            case Op::ForAll: {
                Chainer cp(*this);
                std::string c = cp.fresh_constant("Arb");
                cp.add_constant(c);
                FormulaPtr inst = substitute(goal->lhs, goal->var, Term{TermKind::Constant, c});
                if (auto sub = cp.derive(inst, depth + 1))
                    return make_node(goal, "universal-generalization", {*sub});
                break;
            }
            case Op::Exists: {
                std::vector<std::string> consts = constants_;
                for (const std::string& c : consts) {
                    FormulaPtr inst =
                        substitute(goal->lhs, goal->var, Term{TermKind::Constant, c});
                    if (auto sub = derive(inst, depth + 1))
                        return make_node(goal, "existential-introduction", {*sub});
                }
                break;
            }
            case Op::Not:
                return derive_negation(goal, depth);
            case Op::Iff:
            case Op::Atom:
                break;  // membership only
        }
        return std::nullopt;
    }

private:
    std::optional<ProofPtr> derive_negation(const FormulaPtr& goal, int depth) {
        const FormulaPtr& g = goal->lhs;
        switch (g->op) {
            case Op::Not:
                if (auto sub = derive(g->lhs, depth + 1))
                    return make_node(goal, "double-negation-introduction", {*sub});
                break;
            case Op::And:
                if (auto sub = derive(neg_normalized(g->lhs), depth + 1))
                    return make_node(goal, "refutation-of-conjunct", {*sub});
                if (auto sub = derive(neg_normalized(g->rhs), depth + 1))
                    return make_node(goal, "refutation-of-conjunct", {*sub});
                break;
            case Op::Or: {
                auto a = derive(neg_normalized(g->lhs), depth + 1);
                if (!a) break;
                auto b = derive(neg_normalized(g->rhs), depth + 1);
                if (!b) break;
                return make_node(goal, "de-morgan", {*a, *b});
            }
            case Op::Implies: {
                auto a = derive(g->lhs, depth + 1);
                if (!a) break;
                auto b = derive(neg_normalized(g->rhs), depth + 1);
                if (!b) break;
                return make_node(goal, "refutation-of-implication", {*a, *b});
            }
            case Op::ForAll: {
                std::vector<std::string> consts = constants_;
                for (const std::string& c : consts) {
                    FormulaPtr inst = substitute(g->lhs, g->var, Term{TermKind::Constant, c});
                    if (auto sub = derive(neg_normalized(inst), depth + 1))
                        return make_node(goal, "counterexample", {*sub});
                }
                break;
            }
            case Op::Exists:
                if (auto sub = derive(forall(g->var, neg_normalized(g->lhs)), depth + 1))
                    return make_node(goal, "quantifier-negation", {*sub});
                break;
            default:
                break;
        }
        return std::nullopt;
    }

    int insert(const FormulaPtr& f, const std::string& rule, std::vector<int> parents,
               const std::string& label = "") {
        std::string key = print_formula(f);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        if (--budget_->steps < 0) throw ResourceLimitError("derived-formula cap exceeded");
        int idx = static_cast<int>(facts_.size());
        facts_.push_back(Fact{f, key, rule, label, std::move(parents)});
        index_.emplace(std::move(key), idx);
        queue_.push_back(idx);
        if (!contradiction_) {
            auto neg = index_.find(print_formula(neg_normalized(f)));
            if (neg != index_.end()) contradiction_ = std::make_pair(idx, neg->second);
        }
        return idx;
    }

    void process(int idx) {
        FormulaPtr f = facts_[idx].f;
        switch (f->op) {
            case Op::And:
                insert(f->lhs, "and-elimination", {idx});
                insert(f->rhs, "and-elimination", {idx});
                break;
            case Op::Iff:
                insert(implies(f->lhs, f->rhs), "iff-elimination", {idx});
                insert(implies(f->rhs, f->lhs), "iff-elimination", {idx});
                break;
            case Op::Not:
                if (f->lhs->op == Op::Not)
                    insert(f->lhs->lhs, "double-negation-elimination", {idx});
                break;
            case Op::ForAll: {
                Template t;
                t.body = strip_forall_prefix(f, t.vars);
                t.parent = idx;
                if (t.vars.size() <= 2) {
                    uni_templates_.push_back(std::move(t));
                    needs_refresh_ = true;
                }
                break;
            }
            case Op::Exists: {
                try {
                    std::string c = fresh_constant("Wit");
                    add_constant(c);
                    insert(substitute(f->lhs, f->var, Term{TermKind::Constant, c}),
                           "skolemization", {idx});
                } catch (const ResourceLimitError&) {
                    // Witness budget exhausted: the bare existential stays as a
                    // fact (sound, Unknown-biased).
                }
                break;
            }
            case Op::Implies: {
                if (auto a = find(f->lhs)) insert(f->rhs, "modus-ponens", {idx, *a});
                if (auto nb = find(neg_normalized(f->rhs)))
                    insert(neg_normalized(f->lhs), "modus-tollens", {idx, *nb});
                break;
            }
            case Op::Or: {
                if (auto na = find(neg_normalized(f->lhs)))
                    insert(f->rhs, "disjunctive-syllogism", {idx, *na});
                if (auto nb = find(neg_normalized(f->rhs)))
                    insert(f->lhs, "disjunctive-syllogism", {idx, *nb});
                break;
            }
            default:
                break;
        }

        // Cross triggers against already-registered facts.
        const std::string& key = facts_[idx].key;
        for (size_t i = 0; i < implications_.size(); ++i) {
            int j = implications_[i];
            FormulaPtr imp = facts_[j].f;
            if (print_formula(imp->lhs) == key) insert(imp->rhs, "modus-ponens", {j, idx});
            if (print_formula(neg_normalized(imp->rhs)) == key)
                insert(neg_normalized(imp->lhs), "modus-tollens", {j, idx});
        }
        for (size_t i = 0; i < disjunctions_.size(); ++i) {
            int j = disjunctions_[i];
            FormulaPtr dis = facts_[j].f;
            if (print_formula(neg_normalized(dis->lhs)) == key)
                insert(dis->rhs, "disjunctive-syllogism", {j, idx});
            if (print_formula(neg_normalized(dis->rhs)) == key)
                insert(dis->lhs, "disjunctive-syllogism", {j, idx});
        }
        for (const auto& [tkey, target] : conj_targets_) {
            if (print_formula(target->lhs) == key) {
                if (auto other = find(target->rhs))
                    insert(target, "and-introduction", {idx, *other});
            } else if (print_formula(target->rhs) == key) {
                if (auto other = find(target->lhs))
                    insert(target, "and-introduction", {*other, idx});
            }
        }
        for (const auto& [tkey, target] : disj_targets_) {
            if (print_formula(target->lhs) == key || print_formula(target->rhs) == key)
                insert(target, "or-introduction", {idx});
        }

        if (f->op == Op::Implies) implications_.push_back(idx);
        if (f->op == Op::Or) disjunctions_.push_back(idx);
    }

    // And/Or subformulas of roots become targets for the introduction rules;
    // keeps the closure finite.
    void register_universe(const FormulaPtr& f) {
        switch (f->op) {
            case Op::Atom:
                return;
            case Op::Not:
            case Op::ForAll:
            case Op::Exists:
                register_universe(f->lhs);
                return;
            default: {
                std::vector<std::string> vars = free_variables(f);
                if (vars.size() <= 2) {
                    Template t{vars, f, -1};
                    if (f->op == Op::And) conj_universe_.push_back(t);
                    if (f->op == Op::Or) disj_universe_.push_back(t);
                }
                register_universe(f->lhs);
                register_universe(f->rhs);
                needs_refresh_ = true;
                return;
            }
        }
    }

    void for_each_instance(const Template& t, const std::function<void(FormulaPtr)>& fn) {
        if (t.vars.empty()) {
            fn(t.body);
            return;
        }
        if (constants_.empty()) return;
        if (t.vars.size() == 1) {
            for (const std::string& c : constants_)
                fn(substitute(t.body, t.vars[0], Term{TermKind::Constant, c}));
            return;
        }
        for (const std::string& c1 : constants_) {
            FormulaPtr partial = substitute(t.body, t.vars[0], Term{TermKind::Constant, c1});
            for (const std::string& c2 : constants_)
                fn(substitute(partial, t.vars[1], Term{TermKind::Constant, c2}));
        }
    }

    void refresh_instantiations() {
        needs_refresh_ = false;
        for (size_t i = 0; i < uni_templates_.size(); ++i) {
            Template t = uni_templates_[i];  // copy: vector may grow while iterating
            for_each_instance(
                t, [&](FormulaPtr inst) { insert(inst, "universal-instantiation", {t.parent}); });
        }
        for (size_t i = 0; i < conj_universe_.size(); ++i) {
            Template t = conj_universe_[i];
            for_each_instance(t, [&](FormulaPtr inst) {
                std::string key = print_formula(inst);
                if (conj_targets_.emplace(key, inst).second) {
                    auto a = find(inst->lhs);
                    auto b = find(inst->rhs);
                    if (a && b) insert(inst, "and-introduction", {*a, *b});
                }
            });
        }
        for (size_t i = 0; i < disj_universe_.size(); ++i) {
            Template t = disj_universe_[i];
            for_each_instance(t, [&](FormulaPtr inst) {
                std::string key = print_formula(inst);
                if (disj_targets_.emplace(key, inst).second) {
                    if (auto a = find(inst->lhs)) insert(inst, "or-introduction", {*a});
                    else if (auto b = find(inst->rhs)) insert(inst, "or-introduction", {*b});
                }
            });
        }
    }

    Budget* budget_;
    std::vector<Fact> facts_;
    std::map<std::string, int> index_;
    std::deque<int> queue_;
    std::vector<std::string> constants_;
    std::set<std::string> constant_set_;
    std::vector<int> implications_;
    std::vector<int> disjunctions_;
    std::vector<Template> uni_templates_;
    std::vector<Template> conj_universe_;
    std::vector<Template> disj_universe_;
    std::map<std::string, FormulaPtr> conj_targets_;
    std::map<std::string, FormulaPtr> disj_targets_;
    std::optional<std::pair<int, int>> contradiction_;
    std::map<int, ProofPtr> proof_memo_;
    bool needs_refresh_ = false;
};

Derivation linearize(const ProofPtr& root) {
    Derivation d;
    std::map<std::string, int> seen;
    std::function<int(const ProofPtr&)> rec = [&](const ProofPtr& n) -> int {
        std::string key = n->rule + "|" + n->label + "|" + print_formula(n->f);
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        std::vector<int> ants;
        for (const ProofPtr& c : n->children) ants.push_back(rec(c));
        int idx = static_cast<int>(d.steps.size());
        d.steps.push_back(ProofStep{print_formula(n->f), n->rule, n->label, std::move(ants)});
        seen[key] = idx;
        return idx;
    };
    rec(root);
    return d;
}

int effective_quantifier_depth(const FormulaPtr& f) {
    return quantifier_depth(f) + static_cast<int>(free_variables(f).size());
}

}  // namespace

EvalResult evaluate_conclusion(const FolDocument& doc, const AnnotatedFormula& conclusion,
                               const EvalOptions& opts) {
    for (const AnnotatedFormula& p : doc.premises)
        if (effective_quantifier_depth(p.formula) > 2)
            throw UnsupportedFragmentError("premise exceeds quantifier nesting depth 2: " +
                                           print_formula(p.formula));
    if (effective_quantifier_depth(conclusion.formula) > 2)
        throw UnsupportedFragmentError("conclusion exceeds quantifier nesting depth 2: " +
                                       print_formula(conclusion.formula));

    Budget budget{opts.step_cap, opts.max_constants};
    Chainer base(&budget);
    int premise_no = 0;
    for (const AnnotatedFormula& p : doc.premises)
        base.add_root(p.formula, "premise", "Premise " + std::to_string(++premise_no));
    for (const std::string& c : constants_in(conclusion.formula)) base.add_constant(c);
    if (base.constants().empty()) base.add_constant(base.fresh_constant("Arb"));
    base.saturate();

    EvalResult result;
    result.inconsistent_premises = base.has_contradiction();

    FormulaPtr goal = expand_xor(conclusion.formula);
    {
        std::vector<std::string> fv = free_variables(goal);
        for (auto it = fv.rbegin(); it != fv.rend(); ++it) goal = forall(*it, goal);
    }

    {
        Chainer t(base);
        if (auto proof = t.derive(goal, 0)) {
            result.verdict = Verdict::True;
            result.derivation = linearize(*proof);
            return result;
        }
    }
    {
        Chainer t(base);
        if (auto proof = t.derive(neg_normalized(goal), 0)) {
            result.verdict = Verdict::False;
            result.derivation = linearize(*proof);
            return result;
        }
    }
    if (!result.inconsistent_premises) {
        Chainer t(base);
        t.add_root(conclusion.formula, "assumption", "conclusion assumed");
        t.saturate();
        if (t.has_contradiction()) {
            auto [i, j] = t.contradiction_pair();
            auto node = make_node(neg_normalized(goal), "reductio",
                                  {t.prove_fact(i), t.prove_fact(j)});
            result.verdict = Verdict::False;
            result.derivation = linearize(node);
            return result;
        }
    }
    result.verdict = Verdict::Unknown;
    return result;
}

}  // namespace inspire::fol
