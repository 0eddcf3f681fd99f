#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sggi/permutation.hpp"

namespace sggi {

using BigInt = boost::multiprecision::cpp_int;
using Partition = std::vector<std::vector<Point>>;

// One level of a stabilizer chain: the orbit of base_point under the
// stabilizer of the earlier base points, with a coset representative for
// each orbit point.
struct ChainLevel {
  Point base_point = 0;
  std::vector<std::size_t> gens;      // indices into the strong generating set
  std::vector<Point> orbit;           // discovery order, orbit[0] == base_point
  std::vector<std::int32_t> position; // point -> index in orbit, or -1
  std::vector<Permutation> reps;      // reps[k] maps base_point to orbit[k]
  std::vector<Permutation> inv_reps;

  bool in_orbit(Point x) const { return position[x] >= 0; }
  const Permutation& rep(Point x) const { return reps[position[x]]; }
  const Permutation& inv_rep(Point x) const { return inv_reps[position[x]]; }
};

// A permutation group given by generators, with a base and strong
// generating set built by deterministic Schreier-Sims at construction.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  // The chain starts with the given base points (in order); further points
  // are appended as needed, each the least point moved by the element that
  // requires it.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            const std::vector<Point>& base_prefix);

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;

  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Permutation& g) const;
  bool contains_group(const PermGroup& h) const;

  Partition orbits() const;
  bool is_transitive() const;

  // All elements in a fixed order; throws if the order exceeds limit.
  std::vector<Permutation> elements(std::size_t limit = 1000000) const;

 private:
  void build(const std::vector<Point>& base_prefix);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<ChainLevel> levels_;
  BigInt order_ = 1;
};

BigInt group_order(const PermGroup& g);
BigInt factorial(std::size_t n);
// Throws InvalidArgument unless x > 0.
std::size_t floor_log2(const BigInt& x);

// Finest partition of {0..n-1} closed under the generators, cells sorted
// and ordered by least element.
Partition orbits(const std::vector<Permutation>& gens, std::size_t n);

struct BlockSystem {
  std::size_t degree = 0;
  Partition blocks;
};

// A block system with blocks of the least size > 1, the block containing 0
// being lexicographically least among those; nullopt means primitive.
// Throws if the group is intransitive.
std::optional<BlockSystem> minimal_block_system(const PermGroup& g);
bool is_primitive(const PermGroup& g);

// Order of a ∩ b, by backtracking through a's stabilizer chain and
// discarding branches whose base images no element of b can realize.
BigInt intersection_order(const PermGroup& a, const PermGroup& b);

// Text format: a header "group n k", then k generators in 1-based cycle
// notation, one per line. Lines starting with '#' and blank lines are
// ignored.
PermGroup parse_group(std::string_view text);
std::string format_group(const PermGroup& g);

}  // namespace sggi
