#include <algorithm>

#include "inspire/arena/arena.hpp"
#include "inspire/util/logging.hpp"

namespace inspire::arena {

std::vector<RankingRow> rank(const std::map<std::string, std::vector<ScoreCard>>& by_engine) {
    std::vector<RankingRow> rows;
    for (const auto& [engine, cards] : by_engine) {
        if (cards.empty()) {
            util::log_warn("rank: engine ", engine, " has zero scorecards; excluded");
            continue;
        }
        DimensionScores means;
        for (DimensionId dim : kAllDimensions) {
            double sum = 0.0;
            for (const ScoreCard& card : cards) sum += card.scores.at(dim);
            means[dim] = sum / static_cast<double>(cards.size());
        }
        rows.push_back(RankingRow{engine, aggregate_scorecard(means),
                                  static_cast<int>(cards.size())});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const RankingRow& a, const RankingRow& b) {
        if (a.card.overall != b.card.overall) return a.card.overall > b.card.overall;
        return a.engine < b.engine;  // tie-break: stable order by engine id
    });
    return rows;
}

}  // namespace inspire::arena
