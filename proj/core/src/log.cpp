#include "tidecal/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace tidecal::log {

namespace {

Level g_threshold = []() {
    const char* env = std::getenv("TIDECAL_LOG");
    if (env == nullptr) return Level::Warn;
    if (std::strcmp(env, "error") == 0) return Level::Error;
    if (std::strcmp(env, "warn") == 0) return Level::Warn;
    if (std::strcmp(env, "info") == 0) return Level::Info;
    if (std::strcmp(env, "debug") == 0) return Level::Debug;
    return Level::Warn;
}();

std::mutex g_mutex;

const char* level_tag(Level level) {
    switch (level) {
        case Level::Error: return "error";
        case Level::Warn: return "warn";
        case Level::Info: return "info";
        case Level::Debug: return "debug";
    }
    return "?";
}

}  // namespace

Level threshold() { return g_threshold; }

void set_threshold(Level level) { g_threshold = level; }

void write(Level level, const std::string& message) {
    if (static_cast<int>(level) > static_cast<int>(g_threshold)) return;
    std::lock_guard<std::mutex> lock(g_mutex);
    std::fprintf(stderr, "[tidecal %s] %s\n", level_tag(level), message.c_str());
}

}  // namespace tidecal::log
