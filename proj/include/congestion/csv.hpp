#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace congestion {

/// Shortest round-trip-safe text for a double (17 significant digits).
std::string format_double(double v);

/// Splits one CSV line on commas; no quoting support (none of our tables need it).
std::vector<std::string> split_csv_line(std::string_view line);

std::string join_csv(const std::vector<std::string>& fields);

}  // namespace congestion
