#include <algorithm>
#include <set>

#include "inspire/arena/arena.hpp"

namespace inspire::arena {

std::vector<Match> schedule_round_robin(const std::vector<std::string>& engines,
                                        const std::vector<Topic>& topics) {
    if (engines.size() < 2) throw ValidationError("round robin needs at least 2 engines");
    if (topics.empty()) throw ValidationError("round robin needs at least 1 topic");
    std::set<std::string> unique(engines.begin(), engines.end());
    if (unique.size() != engines.size())
        throw ValidationError("duplicate engine ids in round-robin schedule");

    std::vector<std::string> sorted(engines.begin(), engines.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<Match> out;
    out.reserve(topics.size() * sorted.size() * (sorted.size() - 1));
    for (const Topic& topic : topics)
        for (const std::string& pro : sorted)
            for (const std::string& con : sorted)
                if (pro != con) out.push_back(Match{topic, pro, con});
    return out;
}

}  // namespace inspire::arena
