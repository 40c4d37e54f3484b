/**
 * @file iso8601.hpp
 * @brief ISO-8601 UTC timestamp parsing and formatting.
 */
#pragma once

#include <string>
#include <string_view>

namespace tidecal {

/// Parse "YYYY-MM-DDThh:mm:ss[.frac]Z" (or "+00:00") into seconds since
/// the Unix epoch. Returns false on malformed input.
bool parse_iso8601_utc(std::string_view text, double& epoch_seconds);

/// Format epoch seconds as ISO-8601 UTC. Fractional seconds are printed
/// only when present, trimmed of trailing zeros (microsecond resolution).
std::string format_iso8601_utc(double epoch_seconds);

}  // namespace tidecal
