#pragma once

#include <optional>
#include <string>

namespace seasoncast {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest decimal string that parses back to exactly the same double.
std::string fmt_double(double v);

/// fmt_double, or "x" for a missing value (the table convention for
/// metrics that do not apply, e.g. latency of an external forecast).
std::string fmt_optional(const std::optional<double>& v);

std::string read_text_file(const std::string& path); // throws MissingFile
void write_text_file(const std::string& path, const std::string& content); // throws IOError

} // namespace seasoncast
