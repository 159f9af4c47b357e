#pragma once

// Test-only brute-force truth-table oracle over the propositional skeleton of
// ground documents, independent of the forward-chaining prover.

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "inspire/fol/ast.hpp"
#include "inspire/fol/printer.hpp"

namespace foltest {

using inspire::fol::Formula;
using inspire::fol::FormulaPtr;
using inspire::fol::Op;

inline void collect_atom_keys(const FormulaPtr& f, std::set<std::string>& keys) {
    switch (f->op) {
        case Op::Atom:
            keys.insert(inspire::fol::print_formula(f));
            return;
        case Op::Not:
        case Op::ForAll:
        case Op::Exists:
            collect_atom_keys(f->lhs, keys);
            return;
        default:
            collect_atom_keys(f->lhs, keys);
            collect_atom_keys(f->rhs, keys);
            return;
    }
}

inline bool eval_ground(const FormulaPtr& f, const std::map<std::string, bool>& env) {
    switch (f->op) {
        case Op::Atom:
            return env.at(inspire::fol::print_formula(f));
        case Op::Not:
            return !eval_ground(f->lhs, env);
        case Op::And:
            return eval_ground(f->lhs, env) && eval_ground(f->rhs, env);
        case Op::Or:
            return eval_ground(f->lhs, env) || eval_ground(f->rhs, env);
        case Op::Xor:
            return eval_ground(f->lhs, env) != eval_ground(f->rhs, env);
        case Op::Implies:
            return !eval_ground(f->lhs, env) || eval_ground(f->rhs, env);
        case Op::Iff:
            return eval_ground(f->lhs, env) == eval_ground(f->rhs, env);
        default:
            throw std::logic_error("oracle only handles ground formulas");
    }
}

struct OracleResult {
    bool premises_satisfiable = false;
    bool entails_conclusion = true;       // vacuously true when unsatisfiable
    bool entails_negation = true;
};

inline OracleResult truth_table_oracle(const std::vector<FormulaPtr>& premises,
                                       const FormulaPtr& conclusion) {
    std::set<std::string> keys;
    for (const FormulaPtr& p : premises) collect_atom_keys(p, keys);
    collect_atom_keys(conclusion, keys);
    std::vector<std::string> atoms(keys.begin(), keys.end());

    OracleResult result;
    size_t n = atoms.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::map<std::string, bool> env;
        for (size_t i = 0; i < n; ++i) env[atoms[i]] = (mask >> i) & 1;
        bool all = true;
        for (const FormulaPtr& p : premises)
            if (!eval_ground(p, env)) {
                all = false;
                break;
            }
        if (!all) continue;
        result.premises_satisfiable = true;
        if (!eval_ground(conclusion, env)) result.entails_conclusion = false;
        if (eval_ground(conclusion, env)) result.entails_negation = false;
    }
    return result;
}

// Random ground formulas over at most 4 distinct atoms.
class GroundGenerator {
public:
    explicit GroundGenerator(uint32_t seed) : rng_(seed) {}

    FormulaPtr atom() {
        static const std::vector<std::pair<std::string, std::string>> atoms = {
            {"P", "A"}, {"Q", "A"}, {"R", "B"}, {"S", "C"}};
        auto& [pred, constant] = atoms[rng_() % atoms.size()];
        return inspire::fol::atom(pred, {inspire::fol::make_term(constant)});
    }

    FormulaPtr formula(int depth) {
        if (depth <= 0 || rng_() % 4 == 0) return atom();
        switch (rng_() % 6) {
            case 0: return inspire::fol::negate(formula(depth - 1));
            case 1: return inspire::fol::conj(formula(depth - 1), formula(depth - 1));
            case 2: return inspire::fol::disj(formula(depth - 1), formula(depth - 1));
            case 3:
            case 4: return inspire::fol::implies(formula(depth - 1), formula(depth - 1));
            default: return inspire::fol::iff(formula(depth - 1), formula(depth - 1));
        }
    }

    inspire::fol::FolDocument document() {
        inspire::fol::FolDocument doc;
        int premises = 1 + static_cast<int>(rng_() % 4);
        for (int i = 0; i < premises; ++i)
            doc.premises.push_back({formula(1 + static_cast<int>(rng_() % 3)), ""});
        doc.conclusions.push_back({formula(1 + static_cast<int>(rng_() % 2)), ""});
        return doc;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace foltest
