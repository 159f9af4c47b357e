#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "inspire/gateways/gateway.hpp"

namespace testutil {

// Programmable transport: the handler sees (base_url, path, body) and returns
// the raw HTTP response. Defaults to delegating chat/search to the sim
// backend.
class ScriptedTransport : public inspire::gateways::Transport {
public:
    using Handler = std::function<inspire::gateways::HttpResponse(
        const std::string& base_url, const std::string& path, const std::string& body)>;

    explicit ScriptedTransport(Handler handler) : handler_(std::move(handler)) {}

    inspire::gateways::HttpResponse post_json(
        const std::string& base_url, const std::string& path,
        const std::map<std::string, std::string>& headers, const std::string& body) override {
        (void)headers;
        ++calls;
        return handler_(base_url, path, body);
    }

    int calls = 0;

private:
    Handler handler_;
};

// Wraps a completion in the OpenAI-style chat body the gateway parses.
inline std::string chat_body(const std::string& content) {
    nlohmann::ordered_json j{
        {"choices",
         nlohmann::ordered_json::array(
             {nlohmann::ordered_json{{"message", {{"role", "assistant"}, {"content", content}}}}})}};
    return j.dump();
}

// Scripted chat transport answering from a fixed queue (cycling when empty).
class ReplyQueueTransport : public inspire::gateways::Transport {
public:
    explicit ReplyQueueTransport(std::vector<std::string> replies)
        : replies_(std::move(replies)) {}

    inspire::gateways::HttpResponse post_json(const std::string&, const std::string& path,
                                              const std::map<std::string, std::string>&,
                                              const std::string& body) override {
        last_bodies.push_back(body);
        (void)path;
        std::string reply = replies_[std::min(index_, replies_.size() - 1)];
        ++index_;
        return {200, chat_body(reply)};
    }

    std::vector<std::string> last_bodies;

private:
    std::vector<std::string> replies_;
    size_t index_ = 0;
};

inline std::map<std::string, inspire::gateways::EngineConfig> sim_engines(
    std::initializer_list<const char*> ids) {
    std::map<std::string, inspire::gateways::EngineConfig> out;
    for (const char* id : ids) {
        inspire::gateways::EngineConfig e;
        e.id = id;
        e.base_url = std::string("sim://") + id;
        e.model = std::string(id) + "-model";
        out.emplace(e.id, std::move(e));
    }
    return out;
}

inline inspire::gateways::GatewayPolicy fast_policy() {
    inspire::gateways::GatewayPolicy p;
    p.max_retries = 2;
    p.backoff_base_ms = 1;
    p.requests_per_minute = 0;  // disabled
    p.timeout_seconds = 5;
    return p;
}

inline std::filesystem::path temp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    auto dir = std::filesystem::temp_directory_path() /
               ("inspire-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir);
    return dir;
}

// Appendix-style FOL example document (junk-food ban).
inline const char* kTable11Document =
    "Predicates:\n"
    "1. JunkFood(x) ::: x is junk food.\n"
    "2. CausesHealthIssues(x) ::: x causes health issues.\n"
    "3. ShouldBan(x) ::: x should be banned.\n"
    "4. SchoolResponsibility(x) ::: x is a school's responsibility.\n"
    "Premises:\n"
    "1. JunkFood(x) \xe2\x86\x92 CausesHealthIssues(x) ::: Junk food causes health issues.\n"
    "2. CausesHealthIssues(x) \xe2\x86\x92 ShouldBan(x) ::: If something causes health issues, "
    "it should be banned.\n"
    "3. SchoolResponsibility(PromoteHealth) ::: Schools are responsible for promoting health.\n"
    "Conclusions:\n"
    "1. (JunkFood(x) \xe2\x88\xa7 CausesHealthIssues(x)) \xe2\x86\x92 ShouldBan(x) ::: Junk "
    "food should be banned because it causes health issues.\n"
    "2. SchoolResponsibility(PromoteHealth) \xe2\x86\x92 ShouldBan(JunkFood) ::: Schools "
    "should ban junk food as part of their responsibility to promote health.\n";

// Published evaluation-table rows: EA, AC, AA, TR, printed subjective average,
// FA, LV, printed objective average, printed overall.
struct TableRow {
    const char* name;
    double ea, ac, aa, tr, subj_avg, fa, lv, obj_avg, overall;
};

inline const std::vector<TableRow>& machine_eval_rows() {
    static const std::vector<TableRow> rows = {
        {"Qwen-1.5B", 0.421, 0.420, 0.360, 0.283, 0.371, 0.621, 0.388, 0.505, 0.416},
        {"Inspire-Qwen-1.5B", 0.781, 0.780, 0.640, 0.705, 0.727, 0.786, 0.720, 0.753, 0.735},
        {"LLaMA-8B", 0.403, 0.320, 0.320, 0.421, 0.366, 0.467, 0.428, 0.448, 0.393},
        {"Inspire-LLaMA-8B", 0.641, 0.760, 0.802, 0.781, 0.746, 0.727, 0.680, 0.704, 0.732},
        {"Phi-3.6B", 0.522, 0.503, 0.482, 0.480, 0.497, 0.621, 0.454, 0.538, 0.510},
        {"Inspire-Phi-3.6B", 0.803, 0.806, 0.840, 0.860, 0.827, 0.813, 0.494, 0.654, 0.769},
        {"DeepSeek-R8B", 0.626, 0.603, 0.580, 0.580, 0.597, 0.706, 0.640, 0.673, 0.623},
        {"Inspire-DeepSeek-R8B", 0.801, 0.823, 0.841, 0.822, 0.822, 0.820, 0.800, 0.810, 0.818},
        {"o1-mini", 0.844, 0.783, 0.780, 0.806, 0.803, 0.805, 0.760, 0.783, 0.796},
        {"GPT-4o-mini", 0.827, 0.880, 0.840, 0.860, 0.852, 0.831, 0.801, 0.816, 0.840},
    };
    return rows;
}

inline const std::vector<TableRow>& human_eval_rows() {
    static const std::vector<TableRow> rows = {
        {"Qwen-1.5B", 0.489, 0.466, 0.254, 0.310, 0.380, 0.617, 0.449, 0.533, 0.431},
        {"Inspire-Qwen-1.5B", 0.814, 0.742, 0.695, 0.770, 0.755, 0.782, 0.611, 0.697, 0.736},
        {"LLaMA-8B", 0.323, 0.275, 0.432, 0.472, 0.376, 0.446, 0.350, 0.398, 0.383},
        {"Inspire-LLaMA-8B", 0.683, 0.860, 0.693, 0.859, 0.774, 0.730, 0.594, 0.662, 0.737},
        {"Phi-3.6B", 0.483, 0.567, 0.545, 0.570, 0.541, 0.644, 0.494, 0.569, 0.551},
        {"Inspire-Phi-3.6B", 0.842, 0.846, 0.846, 0.825, 0.840, 0.696, 0.512, 0.604, 0.761},
        {"DeepSeek-R8B", 0.511, 0.487, 0.603, 0.521, 0.531, 0.797, 0.585, 0.691, 0.584},
        {"Inspire-DeepSeek-R8B", 0.852, 0.901, 0.818, 0.858, 0.857, 0.813, 0.716, 0.765, 0.826},
        {"o1-mini", 0.805, 0.883, 0.747, 0.815, 0.813, 0.724, 0.658, 0.691, 0.772},
        {"GPT-4o-mini", 0.866, 0.826, 0.899, 0.836, 0.857, 0.830, 0.755, 0.793, 0.835},
    };
    return rows;
}

}  // namespace testutil
