#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sggi::text {

// Lines without their terminators; a trailing newline does not produce an
// extra empty line.
std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split_words(std::string_view line);
// Parses a non-negative decimal integer; throws ParseError with context.
std::size_t parse_count(const std::string& word, const char* what);

}  // namespace sggi::text
