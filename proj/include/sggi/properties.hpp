#pragma once

#include <string>
#include <vector>

#include "sggi/sggi.hpp"

namespace sggi {

// One structural bound checked against a concrete SGGI. A check whose
// hypotheses the input does not meet reports applicable = false, holds = true.
// All checks except fracture_forest assume a transitive independent string.
struct PropertyCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

// Runs every check:
//   fracture_forest            a fracture graph has r edges and is a forest
//   two_fracture_rank_bound    2r <= n when a 2-fracture graph exists
//   perfect_split_primitive    a perfect split forces a primitive group
//   perfect_split_labels       no perfect split at label 1 or r-2
//   no_four_consecutive_perfect_splits
//   split_count_bound          3s <= 2r
//   rank_split_bound           4r <= 2n + s - 2
//   primitive_side_interval    a primitive side has interval label set
//   imprimitive_sides_rank_bound  2r <= n - 1 when both sides are imprimitive
//   path_labels                labels along paths from a square-free edge
std::vector<PropertyCheck> check_properties(const Sggi& s);

// Whether every path that starts with an f-edge outside all alternating
// squares, uses no other f-edge and ends with an l-edge carries every label
// strictly between l and f. An edge also carrying a label at distance at
// least 2 counts as lying in a square. Decided by reachability rather than
// by listing paths. On failure, detail receives the first violation.
bool path_labels_hold(const Sggi& s, std::string* detail = nullptr);

}  // namespace sggi
