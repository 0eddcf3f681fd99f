#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "sggi/permutation.hpp"

namespace sggi {

// Involutions of Sym(n) (the identity excluded) commuting with every
// element of a fixed set. Backtracking assigns the image of the least open
// point and propagates it through the orbit of that point under the set:
// an involution t commutes with c exactly when t(c(x)) = c(t(x)) for all x.
class CommutingInvolutions {
 public:
  CommutingInvolutions(std::size_t degree, std::vector<Permutation> commute_with,
                       bool even_only = false);

  // Visits every such involution in lexicographic order of image vectors;
  // the visitor returns false to stop.
  void for_each(const std::function<bool(const Permutation&)>& visit) const;
  std::vector<Permutation> all() const;

  // A random such involution, or nullopt when none was found within the
  // attempt limit. fix_weight biases points towards staying fixed.
  std::optional<Permutation> sample(std::mt19937_64& rng, double fix_weight = 1.0,
                                    std::size_t attempts = 64) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> with_;      // with their inverses
  bool even_only_;
};

// Cycle type 2^k 1^(n-2k) with the transpositions (1 2)(3 4)...: one
// representative per conjugacy class of involutions in Sym(n).
std::vector<Permutation> involution_class_representatives(std::size_t degree, bool even_only);

// Generators of the centralizer of an involution in Sym(n).
std::vector<Permutation> involution_centralizer_generators(const Permutation& t);

}  // namespace sggi
