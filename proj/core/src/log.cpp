#include "nlse/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace nlse::log {

Level level() {
    static const Level lvl = [] {
        const char* env = std::getenv("NLSE_GAUGE_LOG");
        if (!env) return Level::warn;
        if (std::strcmp(env, "debug") == 0) return Level::debug;
        if (std::strcmp(env, "info") == 0) return Level::info;
        if (std::strcmp(env, "warn") == 0) return Level::warn;
        if (std::strcmp(env, "error") == 0) return Level::error;
        if (std::strcmp(env, "off") == 0) return Level::off;
        return Level::warn;
    }();
    return lvl;
}

void write(Level lvl, const char* fmt, ...) {
    if (lvl < level()) return;
    static const char* names[] = {"debug", "info", "warn", "error"};
    std::fprintf(stderr, "[nlse-gauge %s] ", names[static_cast<int>(lvl)]);
    va_list args;
    va_start(args, fmt);
    std::vfprintf(stderr, fmt, args);
    va_end(args);
    std::fputc('\n', stderr);
}

} // namespace nlse::log
