#include "sggi/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

#include "sggi/errors.hpp"

namespace sggi {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > std::numeric_limits<Point>::max()) {
    throw InvalidArgument("degree too large");
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw InvalidArgument("image sequence is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (Point x : c) {
      if (x >= degree) throw InvalidArgument("cycle point out of range");
      if (used[x]) throw InvalidArgument("cycles are not disjoint");
      used[x] = true;
    }
    for (std::size_t k = 0; k < c.size(); ++k) {
      p.images_[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return p;
}

Permutation Permutation::transposition(std::size_t degree, Point a, Point b) {
  return from_cycles(degree, {{a, b}});
}

Permutation Permutation::inverse() const {
  Permutation q(degree());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    q.images_[images_[x]] = static_cast<Point>(x);
  }
  return q;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[images_[x]] != x) return false;
  }
  return true;
}

bool Permutation::commutes_with(const Permutation& other) const {
  if (other.degree() != degree()) throw DegreeMismatch("degree mismatch");
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (other.images_[images_[x]] != images_[other.images_[x]]) return false;
  }
  return true;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (g.degree() != degree()) throw DegreeMismatch("degree mismatch");
  // x^(g^-1 p g): relabel each pair (x, p(x)) through g.
  Permutation q(degree());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    q.images_[g.images_[x]] = g.images_[images_[x]];
  }
  return q;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<Point> c;
    for (Point y = static_cast<Point>(x); !seen[y]; y = images_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> s;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) s.push_back(static_cast<Point>(x));
  }
  return s;
}

std::size_t Permutation::order() const {
  std::size_t l = 1;
  for (const auto& c : cycles()) l = std::lcm(l, c.size());
  return l;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw DegreeMismatch("degree mismatch");
  Permutation q(degree());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    q.images_[x] = rhs.images_[images_[x]];
  }
  return q;
}

Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const auto& c : p.cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty cycle notation");
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') {
      throw ParseError("expected '(' in cycle notation: " + std::string(text));
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected character in cycle notation: " + std::string(text));
      }
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) throw ParseError("point out of range: " + std::string(text));
        ++i;
      }
      if (value == 0) throw ParseError("points are 1-based: " + std::string(text));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (cycle.size() == 1) throw ParseError("1-cycles are not allowed: " + std::string(text));
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string(e.what()) + ": " + std::string(text));
  }
}

std::string format_cycles(const Permutation& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sggi
