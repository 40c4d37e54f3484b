/**
 * @file log.hpp
 * @brief Minimal stderr logger. Verbosity comes from the TIDECAL_LOG
 *        environment variable: error, warn (default), info, debug.
 */
#pragma once

#include <string>

namespace tidecal::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

Level threshold();
void set_threshold(Level level);

void write(Level level, const std::string& message);

inline void error(const std::string& m) { write(Level::Error, m); }
inline void warn(const std::string& m) { write(Level::Warn, m); }
inline void info(const std::string& m) { write(Level::Info, m); }
inline void debug(const std::string& m) { write(Level::Debug, m); }

}  // namespace tidecal::log
