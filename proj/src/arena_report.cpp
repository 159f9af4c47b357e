#include <cmath>
#include <fstream>
#include <sstream>

#include "inspire/arena/arena.hpp"
#include "inspire/core/json_io.hpp"
#include "inspire/util/fs.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::arena {

namespace {

// Fig.-style axis order for the radar chart.
constexpr std::array<DimensionId, 6> kRadarAxes = {DimensionId::EA, DimensionId::AC,
                                                   DimensionId::AA, DimensionId::TR,
                                                   DimensionId::LV, DimensionId::FA};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    return "\"" + util::replace_all(s, "\"", "\"\"") + "\"";
}

}  // namespace

std::string render_radar_svg(const std::vector<RankingRow>& ranking) {
    const double cx = 260, cy = 240, radius = 170;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"500\" "
          "viewBox=\"0 0 520 500\">\n";
    os << "  <rect width=\"520\" height=\"500\" fill=\"white\"/>\n";

    auto point = [&](int axis, double r) {
        double angle = M_PI / 2.0 - axis * (2.0 * M_PI / 6.0);
        double x = cx + r * std::cos(angle);
        double y = cy - r * std::sin(angle);
        return std::pair<double, double>(x, y);
    };

    // grid rings and axes
    for (int ring = 1; ring <= 4; ++ring) {
        double r = radius * ring / 4.0;
        os << "  <polygon fill=\"none\" stroke=\"#dddddd\" points=\"";
        for (int a = 0; a < 6; ++a) {
            auto [x, y] = point(a, r);
            os << util::format_fixed(x, 1) << "," << util::format_fixed(y, 1)
               << (a + 1 < 6 ? " " : "");
        }
        os << "\"/>\n";
    }
    for (int a = 0; a < 6; ++a) {
        auto [x, y] = point(a, radius);
        os << "  <line x1=\"" << util::format_fixed(cx, 1) << "\" y1=\""
           << util::format_fixed(cy, 1) << "\" x2=\"" << util::format_fixed(x, 1) << "\" y2=\""
           << util::format_fixed(y, 1) << "\" stroke=\"#bbbbbb\"/>\n";
        auto [lx, ly] = point(a, radius + 18);
        os << "  <text x=\"" << util::format_fixed(lx, 1) << "\" y=\""
           << util::format_fixed(ly, 1)
           << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\">"
           << to_string(kRadarAxes[static_cast<size_t>(a)]) << "</text>\n";
    }

    for (size_t e = 0; e < ranking.size(); ++e) {
        const RankingRow& row = ranking[e];
        const char* color = kPalette[e % (sizeof(kPalette) / sizeof(kPalette[0]))];
        os << "  <polygon fill=\"" << color << "\" fill-opacity=\"0.15\" stroke=\"" << color
           << "\" stroke-width=\"2\" points=\"";
        for (int a = 0; a < 6; ++a) {
            double score = row.card.scores.at(kRadarAxes[static_cast<size_t>(a)]);
            auto [x, y] = point(a, radius * score);
            os << util::format_fixed(x, 1) << "," << util::format_fixed(y, 1)
               << (a + 1 < 6 ? " " : "");
        }
        os << "\"/>\n";
        double ly = 470.0 - 18.0 * static_cast<double>(ranking.size() - 1 - e);
        os << "  <rect x=\"20\" y=\"" << util::format_fixed(ly - 10, 1)
           << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        os << "  <text x=\"38\" y=\"" << util::format_fixed(ly, 1)
           << "\" font-size=\"13\" font-family=\"sans-serif\">" << row.engine << " ("
           << util::format_fixed(row.card.overall, 3) << ")</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void emit_reports(const std::filesystem::path& report_dir, const std::vector<RankingRow>& ranking,
                  const std::map<std::string, std::map<std::string, ScoreCard>>& debate_scores) {
    util::ensure_dir(report_dir);

    std::ostringstream csv;
    csv << "engine,ea,ac,aa,tr,fa,lv,subjective_avg,objective_avg,overall,debates\n";
    for (const RankingRow& row : ranking) {
        csv << csv_escape(row.engine);
        for (DimensionId dim : kAllDimensions)
            csv << "," << util::format_fixed(row.card.scores.at(dim), 3);
        csv << "," << util::format_fixed(row.card.subjective_avg, 3) << ","
            << util::format_fixed(row.card.objective_avg, 3) << ","
            << util::format_fixed(row.card.overall, 3) << "," << row.debates << "\n";
    }
    util::write_file(report_dir / "ranking.csv", csv.str());

    Json scores = Json::object();
    for (const auto& [debate, sides] : debate_scores) {
        Json s = Json::object();
        for (const auto& [side, card] : sides) s[side] = scorecard_to_json(card);
        scores[debate] = s;
    }
    util::write_file(report_dir / "scores.json",
                     Json{{"schema", "inspire/scores/v1"}, {"debates", scores}}.dump(2) + "\n");

    util::write_file(report_dir / "radar.svg", render_radar_svg(ranking));
}

}  // namespace inspire::arena
