#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "inspire/core/types.hpp"

namespace inspire::arena {

struct Match {
    Topic topic;
    std::string pro_engine;
    std::string con_engine;
};

// All ordered engine pairs per topic, topic-major with lexicographic pairs:
// T*n*(n-1) matches, each engine in 2*(n-1) per topic. Duplicate engine ids
// are a ValidationError.
std::vector<Match> schedule_round_robin(const std::vector<std::string>& engines,
                                        const std::vector<Topic>& topics);

struct RankingRow {
    std::string engine;
    ScoreCard card;  // aggregate of per-dimension means
    int debates = 0;
};

// Per engine: mean of each dimension across its scorecards, aggregated, rows
// sorted by overall descending (ties stable by engine id).
std::vector<RankingRow> rank(const std::map<std::string, std::vector<ScoreCard>>& by_engine);

struct CorrelationReport {
    std::optional<double> pearson;   // nullopt: undefined (zero variance)
    std::optional<double> spearman;
    std::optional<double> kendall;   // tau-b
    int n = 0;
    std::vector<std::string> notes;
};

// Pearson product-moment, Spearman over average ranks, Kendall tau-b.
// Requires |x| = |y| >= 3.
CorrelationReport correlate(const std::vector<double>& x, const std::vector<double>& y);

// 100 * s_pro / (s_pro + s_con); nullopt when the denominator is zero.
std::optional<double> predicted_pro_share(double s_pro, double s_con);

// Root mean squared error over 0-100 vote shares.
double rmse_winner(const std::vector<double>& predicted, const std::vector<double>& human);

struct HumanScoreRecord {
    std::string debate_id;
    Role side = Role::Pro;
    DimensionScores scores;                  // normalized to [0,1] on ingestion
    std::optional<double> winner_share;      // 0-100
};

// CSV with mandatory header: debate_id,side,ea,ac,aa,tr,fa,lv,winner_share.
// Scores on a 1-10 annotator scale (any value > 1) are divided by 10.
std::vector<HumanScoreRecord> load_human_scores_csv(const std::filesystem::path& path);

// ranking.csv, scores.json (per-debate scorecards) and radar.svg with axes
// ordered EA, AC, AA, TR, LV, FA.
void emit_reports(const std::filesystem::path& report_dir, const std::vector<RankingRow>& ranking,
                  const std::map<std::string, std::map<std::string, ScoreCard>>& debate_scores);

std::string render_radar_svg(const std::vector<RankingRow>& ranking);

}  // namespace inspire::arena
