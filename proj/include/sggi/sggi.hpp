#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sggi/perm_group.hpp"
#include "sggi/permutation.hpp"

namespace sggi {

// An ordered string of permutations rho_0..rho_{r-1} on a common domain.
// The string condition is checked by validate(), not by construction.
class Sggi {
 public:
  Sggi() = default;
  Sggi(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return gens_.size(); }
  const std::vector<Permutation>& gens() const { return gens_; }
  const Permutation& operator[](std::size_t i) const { return gens_[i]; }

  PermGroup group() const { return PermGroup(degree_, gens_); }

  friend bool operator==(const Sggi&, const Sggi&) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
};

struct Violation {
  enum class Kind { non_involution, identity_generator, commuting };
  Kind kind;
  std::size_t i;
  std::size_t j;  // second index for commuting violations, else equal to i

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

ValidationReport validate(std::size_t degree, const std::vector<Permutation>& gens);
ValidationReport validate(const Sggi& s);
std::string describe(const Violation& v);

struct IndependenceResult {
  bool independent = true;
  // A generator lying in the group of the others; the largest such index.
  std::optional<std::size_t> redundant_index;
};

IndependenceResult is_independent(const Sggi& s);

class Selector {
 public:
  static Selector all();
  static Selector subset(std::vector<std::size_t> indices);
  static Selector drop(std::vector<std::size_t> indices);
  static Selector below(std::size_t i);
  static Selector above(std::size_t i);

  // Sorted indices; throws if any index is outside 0..r-1.
  std::vector<std::size_t> resolve(std::size_t r) const;

 private:
  enum class Kind { all, subset, drop, below, above };
  Kind kind_ = Kind::all;
  std::vector<std::size_t> indices_;
};

PermGroup subgroup(const Sggi& s, const Selector& sel);
std::vector<Permutation> select(const Sggi& s, const std::vector<std::size_t>& indices);

Sggi dual(const Sggi& s);

struct IntersectionResult {
  bool holds = true;
  std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> failing;
};

// G_I ∩ G_J = G_{I∩J} for all index sets I, J, where G_I is generated by
// the generators with index in I. Throws when the string is longer than 12.
IntersectionResult intersection_property(const Sggi& s);

bool all_even(const Sggi& s);
// True iff the string generates exactly the given group.
bool generates(const Sggi& s, const PermGroup& target);

// "n r" then one generator per line in 1-based cycle notation.
std::string format_sggi(const Sggi& s);
Sggi parse_sggi(std::string_view text);

}  // namespace sggi
