#include <algorithm>
#include <fstream>

#include "inspire/arena/arena.hpp"
#include "inspire/util/fs.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::arena {

std::vector<HumanScoreRecord> load_human_scores_csv(const std::filesystem::path& path) {
    std::string content = util::read_file(path);
    std::vector<std::string> lines = util::split_lines(content);
    while (!lines.empty() && util::trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw ValidationError("human score CSV is empty: " + path.string());

    const std::string expected = "debate_id,side,ea,ac,aa,tr,fa,lv,winner_share";
    std::string header = util::to_lower(util::collapse_whitespace(lines[0]));
    header = util::replace_all(header, " ", "");
    if (header != expected)
        throw ValidationError("human score CSV header must be '" + expected + "', got: " +
                              lines[0]);

    std::vector<HumanScoreRecord> records;
    for (size_t li = 1; li < lines.size(); ++li) {
        if (util::trim(lines[li]).empty()) continue;
        std::vector<std::string> cols = util::split(lines[li], ',');
        if (cols.size() != 9)
            throw ValidationError("line " + std::to_string(li + 1) + ": expected 9 columns, got " +
                                  std::to_string(cols.size()));
        HumanScoreRecord r;
        r.debate_id = util::trim(cols[0]);
        r.side = role_from_string(cols[1]);
        static const std::array<DimensionId, 6> order = {DimensionId::EA, DimensionId::AC,
                                                         DimensionId::AA, DimensionId::TR,
                                                         DimensionId::FA, DimensionId::LV};
        for (size_t d = 0; d < order.size(); ++d) {
            try {
                r.scores[order[d]] = std::stod(util::trim(cols[d + 2]));
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(li + 1) + ": bad score '" +
                                      cols[d + 2] + "'");
            }
        }
        std::string share = util::trim(cols[8]);
        if (!share.empty()) {
            try {
                r.winner_share = std::stod(share);
            } catch (const std::exception&) {
                throw ValidationError("line " + std::to_string(li + 1) + ": bad winner_share '" +
                                      share + "'");
            }
        }
        records.push_back(std::move(r));
    }

    // Annotator scales run 1-10; machine scores live in [0,1].
    bool ten_scale = false;
    for (const HumanScoreRecord& r : records)
        for (const auto& [dim, v] : r.scores)
            if (v > 1.0) ten_scale = true;
    if (ten_scale)
        for (HumanScoreRecord& r : records)
            for (auto& [dim, v] : r.scores) v = std::clamp(v / 10.0, 0.0, 1.0);
    return records;
}

}  // namespace inspire::arena
