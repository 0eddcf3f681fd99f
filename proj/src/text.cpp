#include "sggi/text.hpp"

#include <cctype>

#include "sggi/errors.hpp"

namespace sggi::text {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

std::size_t parse_count(const std::string& word, const char* what) {
  if (word.empty() || word.size() > 9) throw ParseError(std::string("bad ") + what + ": '" + word + "'");
  std::size_t v = 0;
  for (char c : word) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("bad ") + what + ": '" + word + "'");
    }
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace sggi::text
