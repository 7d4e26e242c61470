#include "forumlens/log.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace forumlens {

LogLevel log_level() {
    static const LogLevel level = [] {
        const char* env = std::getenv("FORUMLENS_LOG");
        if (!env) return LogLevel::off;
        std::string v(env);
        if (v == "error") return LogLevel::error;
        if (v == "info") return LogLevel::info;
        if (v == "debug") return LogLevel::debug;
        return LogLevel::off;
    }();
    return level;
}

static void emit(LogLevel at, const char* tag, const std::string& msg) {
    if (log_level() >= at) std::cerr << "[forumlens:" << tag << "] " << msg << "\n";
}

void log_error(const std::string& msg) { emit(LogLevel::error, "error", msg); }
void log_info(const std::string& msg) { emit(LogLevel::info, "info", msg); }
void log_debug(const std::string& msg) { emit(LogLevel::debug, "debug", msg); }

}  // namespace forumlens
