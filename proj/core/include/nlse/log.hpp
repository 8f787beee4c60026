#pragma once

#include <cstdarg>

namespace nlse::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

/// Current level, read once from NLSE_GAUGE_LOG (debug|info|warn|error|off;
/// default warn).
Level level();
void write(Level lvl, const char* fmt, ...);

} // namespace nlse::log

#define NLSE_LOG_DEBUG(...) ::nlse::log::write(::nlse::log::Level::debug, __VA_ARGS__)
#define NLSE_LOG_INFO(...) ::nlse::log::write(::nlse::log::Level::info, __VA_ARGS__)
#define NLSE_LOG_WARN(...) ::nlse::log::write(::nlse::log::Level::warn, __VA_ARGS__)
#define NLSE_LOG_ERROR(...) ::nlse::log::write(::nlse::log::Level::error, __VA_ARGS__)
