#pragma once

#include <string>
#include <string_view>

#include "magicsq/square.hpp"

namespace magicsq {

// Grid text format: the order on the first line, then n lines of n
// whitespace-separated integers.
std::string to_text(const Square& square);

// {"order": n, "rows": [[...], ...]}, integers only.
std::string to_json(const Square& square);

// n lines of n comma-separated integers; the order is implied.
std::string to_csv(const Square& square);

Square parse_text(std::string_view text);
Square parse_json(std::string_view text);
Square parse_csv(std::string_view text);

// Sniffs the format: '{' starts JSON, a comma in the first data line means
// CSV, anything else is grid text.
Square parse_square(std::string_view text);

// Human-readable rendering of a MagicReport (all sums, constant, verdict).
std::string format_report(const MagicReport& report);

}  // namespace magicsq
