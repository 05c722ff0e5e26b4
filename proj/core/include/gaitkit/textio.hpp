#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gait {

/// Shortest decimal form that parses back to the same double (to_chars).
std::string format_double(double v);

/// Strict double parse of the whole token; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view s);
std::optional<long long> parse_int(std::string_view s);

std::vector<std::string_view> split(std::string_view line, char sep);

std::string read_file(const std::string& path);

/// Write-then-rename so partially written outputs are never observed.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace gait
