#include "sggi/errors.hpp"
#include "sggi/perm_group.hpp"
#include "sggi/text.hpp"

namespace sggi {

PermGroup parse_group(std::string_view input) {
  std::vector<std::string> lines;
  for (auto& line : text::split_lines(input)) {
    auto words = text::split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("empty group text");
  auto header = text::split_words(lines[0]);
  if (header.size() != 3 || header[0] != "group") throw ParseError("group header must be 'group n k'");
  std::size_t n = text::parse_count(header[1], "degree");
  std::size_t k = text::parse_count(header[2], "generator count");
  if (n == 0) throw ParseError("degree must be positive");
  if (lines.size() != k + 1) {
    throw ParseError("expected " + std::to_string(k) + " generator lines, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i <= k; ++i) gens.push_back(parse_cycles(lines[i], n));
  return PermGroup(n, std::move(gens));
}

std::string format_group(const PermGroup& g) {
  std::string out = "group " + std::to_string(g.degree()) + " " +
                    std::to_string(g.generators().size()) + "\n";
  for (const auto& p : g.generators()) out += format_cycles(p) + "\n";
  return out;
}

}  // namespace sggi
