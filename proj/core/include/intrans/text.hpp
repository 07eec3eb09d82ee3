#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace intrans {

/// Shortest round-trip decimal representation, locale-independent
/// (std::to_chars). Integral values print without a trailing ".0".
std::string format_double(double value);

/// Fixed-point formatting with `precision` fractional digits,
/// locale-independent. Used for SVG coordinates.
std::string format_fixed(double value, int precision);

std::string join_doubles(std::span<const double> values, char sep = ',');
std::string join_ints(std::span<const int> values, char sep = ',');

/// Splits on `sep`, trimming surrounding whitespace of each piece; empty
/// input yields an empty list.
std::vector<std::string> split_list(std::string_view text, char sep = ',');

std::string_view trim(std::string_view text);

// Strict numeric parsers. `key` names the config key in error messages.
double parse_double(std::string_view text, std::string_view key);
std::int64_t parse_int(std::string_view text, std::string_view key);
std::uint64_t parse_uint(std::string_view text, std::string_view key);
bool parse_bool(std::string_view text, std::string_view key);

}  // namespace intrans
