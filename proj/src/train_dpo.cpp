#include "inspire/train/dpo.hpp"

#include <fstream>

#include <json.hpp>

#include "inspire/util/fs.hpp"
#include "inspire/util/logging.hpp"

namespace inspire::train {

namespace {

double reward_of(const ScoreCard& card, const std::optional<DimensionId>& dim) {
    return dim ? card.scores.at(*dim) : card.overall;
}

}  // namespace

std::vector<PreferencePair> build_dpo_pairs(const std::vector<CandidateGroup>& groups,
                                            std::optional<DimensionId> reward_dimension,
                                            double epsilon) {
    std::vector<PreferencePair> pairs;
    for (size_t g = 0; g < groups.size(); ++g) {
        const CandidateGroup& group = groups[g];
        if (group.candidates.size() < 2) {
            util::log_warn("dpo: group ", g, " has fewer than 2 candidates; skipped");
            continue;
        }
        bool missing = false;
        for (const ScoredCandidate& c : group.candidates)
            if (!c.card) missing = true;
        if (missing) {
            util::log_warn("dpo: group ", g, " has a candidate without a scorecard; skipped");
            continue;
        }
        size_t best = 0, worst = 0;
        for (size_t i = 1; i < group.candidates.size(); ++i) {
            double r = reward_of(*group.candidates[i].card, reward_dimension);
            if (r > reward_of(*group.candidates[best].card, reward_dimension)) best = i;
            if (r < reward_of(*group.candidates[worst].card, reward_dimension)) worst = i;
        }
        double margin = reward_of(*group.candidates[best].card, reward_dimension) -
                        reward_of(*group.candidates[worst].card, reward_dimension);
        if (margin <= epsilon) continue;  // near-ties are uninformative
        PreferencePair pair;
        pair.prompt = group.prompt_context;
        pair.chosen = group.candidates[best].text;
        pair.rejected = group.candidates[worst].text;
        pair.dimension = reward_dimension ? to_string(*reward_dimension) : "overall";
        pair.margin = margin;
        pairs.push_back(std::move(pair));
    }
    return pairs;
}

void write_dpo_jsonl(const std::filesystem::path& path, const std::vector<PreferencePair>& pairs,
                     std::optional<DimensionId> reward_dimension, double epsilon) {
    if (path.has_parent_path()) util::ensure_dir(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    nlohmann::ordered_json header{
        {"schema", "inspire/dpo/v1"},
        {"fields", {"prompt", "chosen", "rejected"}},
        {"reward_dimension", reward_dimension ? to_string(*reward_dimension) : "overall"},
        {"epsilon", epsilon}};
    out << header.dump() << "\n";
    for (const PreferencePair& p : pairs) {
        nlohmann::ordered_json j{
            {"prompt", p.prompt}, {"chosen", p.chosen}, {"rejected", p.rejected}};
        out << j.dump() << "\n";
    }
}

}  // namespace inspire::train
