#pragma once

#include <string>

namespace forumlens {

// Verbosity is read once from the FORUMLENS_LOG environment variable:
// "off" (default), "error", "info" or "debug".
enum class LogLevel { off = 0, error = 1, info = 2, debug = 3 };

LogLevel log_level();
void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

}  // namespace forumlens
