#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace inspire::util {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool contains(std::string_view haystack, std::string_view needle);
bool icontains(std::string_view haystack, std::string_view needle);
std::string replace_all(std::string s, std::string_view from, std::string_view to);
std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

// Collapses runs of ASCII whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Filesystem-safe identifier: [A-Za-z0-9._-], everything else mapped to '_'.
std::string slugify(std::string_view s);

// Fixed-precision decimal rendering for reports (no locale surprises).
std::string format_fixed(double v, int decimals);

}  // namespace inspire::util
