#include "inspire/train/sft.hpp"

#include <fstream>

#include "inspire/util/fs.hpp"
#include "inspire/util/logging.hpp"
#include "inspire/util/strings.hpp"

namespace inspire::train {

bool is_refusal(const std::string& reply) {
    static const std::vector<std::string> patterns = {
        "i can't provide",  "i cannot provide", "i can\xe2\x80\x99t provide",
        "i won't provide",  "i am unable to",   "i'm unable to",
        "i can't help with", "i cannot assist", "i can't engage",
    };
    std::string low = util::to_lower(reply);
    for (const std::string& p : patterns)
        if (low.find(p) != std::string::npos) return true;
    return false;
}

namespace {

bool accepted(const std::string& reply) {
    if (is_refusal(reply)) return false;
    if (reply.find(debate::kReasoningMarker) == std::string::npos) return false;
    if (reply.find(debate::kArgumentMarker) == std::string::npos) return false;
    auto [reasoning, argument] = debate::parse_turn(reply);
    (void)reasoning;
    return !util::trim(argument).empty();
}

}  // namespace

std::vector<SftRecord> build_sft_dataset(gateways::GatewayHub& hub,
                                         const std::string& teacher_engine,
                                         const std::vector<Topic>& topics, SftBuildStats* stats,
                                         double temperature, int max_tokens) {
    if (topics.empty()) throw ValidationError("build_sft_dataset needs at least one topic");

    std::vector<SftRecord> records;
    SftBuildStats local;
    for (const Topic& raw : topics) {
        Topic topic = make_topic(raw.id, raw.statement);
        for (Role role : {Role::Pro, Role::Con}) {
            std::string instruction = debate::render_opening_prompt(topic, role);
            gateways::ChatRequest req;
            req.engine = teacher_engine;
            req.temperature = temperature;
            req.max_tokens = max_tokens;
            req.messages = {{"system", debate::render_system_prompt(topic)},
                            {"user", instruction}};

            std::string reply = hub.chat(req);
            if (!accepted(reply)) {
                gateways::ChatRequest retry = req;
                retry.sample_tag = "sft-retry";
                reply = hub.chat(retry);
            }
            if (!accepted(reply)) {
                ++local.skipped;
                util::log_warn("sft: skipping ", topic.id, " (", to_string(role),
                               "): teacher refused or omitted the template markers");
                continue;
            }
            records.push_back(SftRecord{instruction, "", reply});
            ++local.accepted;
        }
    }
    if (stats) *stats = local;
    if (records.empty()) throw BuildError("sft build produced zero accepted records");
    return records;
}

void write_sft_jsonl(const std::filesystem::path& path, const std::vector<SftRecord>& records) {
    if (path.has_parent_path()) util::ensure_dir(path.parent_path());
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    nlohmann::ordered_json header{{"schema", "inspire/sft/v1"},
                                  {"fields", {"instruction", "input", "output"}}};
    out << header.dump() << "\n";
    for (const SftRecord& r : records) {
        nlohmann::ordered_json j{
            {"instruction", r.instruction}, {"input", r.input}, {"output", r.output}};
        out << j.dump() << "\n";
    }
}

}  // namespace inspire::train
