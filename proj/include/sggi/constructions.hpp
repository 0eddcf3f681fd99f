#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sggi/perm_group.hpp"
#include "sggi/repgraph.hpp"
#include "sggi/sggi.hpp"

namespace sggi {

// Least n for which the rank-extremal Alt(n) family is defined with the
// residue of n mod 5: 10, 11, 22, 18, 14 for residues 0..4.
std::size_t alt_family_minimum(std::size_t residue);
bool alt_family_defined(std::size_t n);
// floor(3(n-1)/5) for residues 0, 1, 4 and floor((3n-8)/5) for 2, 3.
std::size_t alt_family_rank(std::size_t n);
// Path on n vertices whose label word is a prefix 0,1,0,1,2,3,2,3,... on an
// even number of labels, followed by units x, x+1, {x,x+2}, x+1, x+2 with x
// advancing by 3; {a,b} is a doubled edge. Throws InvalidArgument when n is
// below the minimum for its residue.
RepGraph alt_family_graph(std::size_t n);
Sggi alt_family(std::size_t n);

// A named witness graph. table 2 rows "1".."18", table 3 rows "A", "B",
// "C", table 4 rows "A'", "B'", "C'". param is the row's auxiliary label:
// i for rows 7, 8, B, C; h for A; g for A'; j for B', C'. k is the extra
// rung label of rows B and B'. rank is r for table 2 rows 1..11 and
// table 4; table 3 rows and table 2 rows 12..18 determine their own rank.
struct WitnessSpec {
  int table = 2;
  std::string row;
  std::size_t rank = 0;
  std::size_t param = 0;
  std::size_t k = 0;
};

std::string describe(const WitnessSpec& spec);
// Throws InvalidArgument for an unknown row or parameters out of range.
// Table 4 graphs keep r labels, the labels below their least one empty.
RepGraph witness_graph(const WitnessSpec& spec);
// Every witness whose graph has at most max_n vertices, with every
// admissible parameter.
std::vector<WitnessSpec> witness_catalog(std::size_t max_n);
// The graph with its used labels renumbered from 0, so that it has no
// empty label.
RepGraph compact_labels(const RepGraph& g);

struct BoundReport {
  enum class Kind { no_sggi, rank_exactly_three, at_most };
  std::size_t n = 0;
  Kind kind = Kind::no_sggi;
  std::size_t theorem_bound = 0;  // meaningful unless kind is no_sggi
  std::optional<std::size_t> construction_rank;
  std::string construction_source;  // "family", "computer" or empty
  BigInt maroti;                    // n * prod_{i < floor(log2 n)} (n - 2^i)
  std::size_t log2_bound = 0;       // floor(log2 |Alt(n)|)
};

// Throws InvalidArgument for n < 3.
BoundReport bounds(std::size_t n);
std::string theorem_bound_text(const BoundReport& b);
BigInt maroti_bound(std::size_t n);

// The primitive groups shipped as fixture files, with the largest rank of
// an SGGI each admits.
struct ExceptionalGroup {
  std::string name;
  std::string file;  // relative to the fixtures directory
  std::size_t degree;
  std::size_t order;
  std::size_t max_rank;
};
const std::vector<ExceptionalGroup>& exceptional_groups();

}  // namespace sggi
