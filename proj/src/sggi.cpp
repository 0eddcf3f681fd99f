#include "sggi/sggi.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sggi/errors.hpp"
#include "sggi/text.hpp"

namespace sggi {

Sggi::Sggi(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.degree() != degree_) throw DegreeMismatch("generator degree differs from SGGI degree");
  }
}

ValidationReport validate(std::size_t degree, const std::vector<Permutation>& gens) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw DegreeMismatch("generator degree differs from stated degree");
  }
  ValidationReport report;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_identity()) {
      report.violations.push_back({Violation::Kind::identity_generator, i, i});
    } else if (!gens[i].is_involution()) {
      report.violations.push_back({Violation::Kind::non_involution, i, i});
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 2; j < gens.size(); ++j) {
      if (!gens[i].commutes_with(gens[j])) {
        report.violations.push_back({Violation::Kind::commuting, i, j});
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

ValidationReport validate(const Sggi& s) { return validate(s.degree(), s.gens()); }

std::string describe(const Violation& v) {
  switch (v.kind) {
    case Violation::Kind::non_involution:
      return "generator " + std::to_string(v.i) + " is not an involution";
    case Violation::Kind::identity_generator:
      return "generator " + std::to_string(v.i) + " is the identity";
    case Violation::Kind::commuting:
      return "generators " + std::to_string(v.i) + " and " + std::to_string(v.j) +
             " do not commute";
  }
  return {};
}

std::vector<Permutation> select(const Sggi& s, const std::vector<std::size_t>& indices) {
  std::vector<Permutation> out;
  for (std::size_t i : indices) {
    if (i >= s.length()) throw InvalidArgument("generator index out of range");
    out.push_back(s[i]);
  }
  return out;
}

IndependenceResult is_independent(const Sggi& s) {
  const std::size_t r = s.length();
  const std::size_t whole_orbits = orbits(s.gens(), s.degree()).size();
  for (std::size_t k = r; k-- > 0;) {
    std::vector<Permutation> others;
    for (std::size_t j = 0; j < r; ++j) {
      if (j != k) others.push_back(s[j]);
    }
    // Fewer generators with more orbits cannot produce s[k].
    if (orbits(others, s.degree()).size() > whole_orbits) continue;
    if (PermGroup(s.degree(), std::move(others)).contains(s[k])) {
      return {false, k};
    }
  }
  return {};
}

Selector Selector::all() { return Selector{}; }

Selector Selector::subset(std::vector<std::size_t> indices) {
  Selector s;
  s.kind_ = Kind::subset;
  s.indices_ = std::move(indices);
  return s;
}

Selector Selector::drop(std::vector<std::size_t> indices) {
  Selector s;
  s.kind_ = Kind::drop;
  s.indices_ = std::move(indices);
  return s;
}

Selector Selector::below(std::size_t i) {
  Selector s;
  s.kind_ = Kind::below;
  s.indices_ = {i};
  return s;
}

Selector Selector::above(std::size_t i) {
  Selector s;
  s.kind_ = Kind::above;
  s.indices_ = {i};
  return s;
}

std::vector<std::size_t> Selector::resolve(std::size_t r) const {
  for (std::size_t i : indices_) {
    if (i >= r) throw InvalidArgument("selector index " + std::to_string(i) + " out of range");
  }
  std::vector<std::size_t> out;
  switch (kind_) {
    case Kind::all:
      out.resize(r);
      std::iota(out.begin(), out.end(), std::size_t{0});
      break;
    case Kind::subset:
      out = indices_;
      break;
    case Kind::drop:
      for (std::size_t i = 0; i < r; ++i) {
        if (std::find(indices_.begin(), indices_.end(), i) == indices_.end()) out.push_back(i);
      }
      break;
    case Kind::below:
      for (std::size_t i = 0; i < indices_[0]; ++i) out.push_back(i);
      break;
    case Kind::above:
      for (std::size_t i = indices_[0] + 1; i < r; ++i) out.push_back(i);
      break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PermGroup subgroup(const Sggi& s, const Selector& sel) {
  return PermGroup(s.degree(), select(s, sel.resolve(s.length())));
}

Sggi dual(const Sggi& s) {
  std::vector<Permutation> gens(s.gens().rbegin(), s.gens().rend());
  return Sggi(s.degree(), std::move(gens));
}

namespace {

std::vector<std::size_t> mask_indices(std::size_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask >> i; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

IntersectionResult intersection_property(const Sggi& s) {
  const std::size_t r = s.length();
  if (r > 12) throw InvalidArgument("intersection property check limited to 12 generators");
  std::map<std::size_t, PermGroup> cache;
  auto group = [&](std::size_t mask) -> const PermGroup& {
    auto it = cache.find(mask);
    if (it == cache.end()) {
      it = cache.emplace(mask, PermGroup(s.degree(), select(s, mask_indices(mask)))).first;
    }
    return it->second;
  };
  const std::size_t full = (std::size_t{1} << r) - 1;
  // Pairs ordered by the larger mask, then the smaller one.
  for (std::size_t hi = 1; hi <= full; ++hi) {
    for (std::size_t lo = 1; lo < hi; ++lo) {
      if ((lo & hi) == lo || (lo & hi) == hi) continue;
      const PermGroup& a = group(lo);
      const PermGroup& b = group(hi);
      const PermGroup& c = group(lo & hi);
      if (!a.contains_group(c) || !b.contains_group(c)) {
        throw Error("generator subset group not contained in its superset group");
      }
      if (a.order() == c.order() || b.order() == c.order()) continue;
      BigInt g = boost::multiprecision::gcd(a.order(), b.order());
      if (g == c.order()) continue;
      if (intersection_order(a, b) != c.order()) {
        return {false, std::make_pair(mask_indices(lo), mask_indices(hi))};
      }
    }
  }
  return {};
}

bool all_even(const Sggi& s) {
  return std::all_of(s.gens().begin(), s.gens().end(),
                     [](const Permutation& g) { return parity(g) == Parity::even; });
}

bool generates(const Sggi& s, const PermGroup& target) {
  if (target.degree() != s.degree()) return false;
  for (const auto& g : s.gens()) {
    if (!target.contains(g)) return false;
  }
  return s.group().order() == target.order();
}

std::string format_sggi(const Sggi& s) {
  std::string out = std::to_string(s.degree()) + " " + std::to_string(s.length()) + "\n";
  for (const auto& g : s.gens()) out += format_cycles(g) + "\n";
  return out;
}

Sggi parse_sggi(std::string_view input) {
  auto lines = text::split_lines(input);
  while (!lines.empty() && text::split_words(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty SGGI text");
  auto header = text::split_words(lines[0]);
  if (header.size() != 2) throw ParseError("SGGI header must be 'n r'");
  std::size_t n = text::parse_count(header[0], "degree");
  std::size_t r = text::parse_count(header[1], "length");
  if (n == 0) throw ParseError("degree must be positive");
  if (lines.size() != r + 1) {
    throw ParseError("expected " + std::to_string(r) + " generator lines, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Permutation> gens;
  for (std::size_t i = 1; i <= r; ++i) gens.push_back(parse_cycles(lines[i], n));
  return Sggi(n, std::move(gens));
}

}  // namespace sggi
