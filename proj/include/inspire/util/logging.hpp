#pragma once

#include <iostream>
#include <mutex>
#include <sstream>
#include <string>

namespace inspire::util {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

LogLevel log_threshold();
void set_log_threshold(LogLevel level);
void log_line(LogLevel level, const std::string& msg);

template <typename... Args>
void logf(LogLevel level, Args&&... args) {
    if (level < log_threshold()) return;
    std::ostringstream os;
    (os << ... << args);
    log_line(level, os.str());
}

template <typename... Args>
void log_warn(Args&&... args) {
    logf(LogLevel::Warn, std::forward<Args>(args)...);
}

template <typename... Args>
void log_info(Args&&... args) {
    logf(LogLevel::Info, std::forward<Args>(args)...);
}

}  // namespace inspire::util
