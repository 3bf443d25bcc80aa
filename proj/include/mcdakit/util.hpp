#ifndef MCDAKIT_UTIL_HPP
#define MCDAKIT_UTIL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcdakit {

/// Shortest decimal string that round-trips to the exact double.
std::string format_double(double v);

/// Strict full-string parse; rejects trailing garbage, empty fields, and
/// locale-dependent forms. '.' is the only decimal separator.
std::optional<double> parse_double(std::string_view text);

std::optional<unsigned long long> parse_uint(std::string_view text);

/// Splits one CSV line on ','. Fields in this toolkit never contain commas
/// or quotes, so no quoting rules apply.
std::vector<std::string_view> split_csv_line(std::string_view line);

std::string join(const std::vector<std::string>& parts, char sep);

} // namespace mcdakit

#endif
