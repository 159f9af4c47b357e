#include "inspire/util/logging.hpp"

#include <atomic>

namespace inspire::util {

namespace {
std::atomic<int> g_threshold{static_cast<int>(LogLevel::Warn)};
std::mutex g_mutex;

const char* level_tag(LogLevel level) {
    switch (level) {
        case LogLevel::Debug: return "debug";
        case LogLevel::Info: return "info";
        case LogLevel::Warn: return "warn";
        case LogLevel::Error: return "error";
    }
    return "?";
}
}  // namespace

LogLevel log_threshold() { return static_cast<LogLevel>(g_threshold.load()); }

void set_log_threshold(LogLevel level) { g_threshold.store(static_cast<int>(level)); }

void log_line(LogLevel level, const std::string& msg) {
    std::lock_guard<std::mutex> lock(g_mutex);
    std::cerr << "[" << level_tag(level) << "] " << msg << "\n";
}

}  // namespace inspire::util
