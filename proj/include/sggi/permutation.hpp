#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sggi {

using Point = std::uint16_t;

// A bijection of {0,...,n-1} stored as its image sequence.
//
// Products act on the right, as in the usual notation a^(pq) = (a^p)^q:
// (p * q)(x) == q(p(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);  // throws unless a bijection

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // Cycles are 0-based point lists; points outside every cycle are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);
  static Permutation transposition(std::size_t degree, Point a, Point b);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const;  // p*p == identity; the identity counts
  bool commutes_with(const Permutation& other) const;
  Permutation conjugate_by(const Permutation& g) const;  // g^-1 * this * g

  // Non-trivial cycles, each rotated to start at its least point, sorted by
  // that point.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<Point> support() const;
  std::size_t order() const;

  Permutation operator*(const Permutation& rhs) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

enum class Parity { even, odd };

Parity parity(const Permutation& p);

// Cycle notation with 1-based points, e.g. "(1 2)(3 4)"; whitespace is
// ignored around tokens and the identity is "()".
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sggi
