#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sggi/errors.hpp"
#include "sggi/perm_group.hpp"
#include "sggi/repgraph.hpp"
#include "sggi/sggi.hpp"

namespace sggi {

using PointPair = std::pair<Point, Point>;

// Thrown when some G_i has no more orbits than G.
class NoFractureGraph : public Error {
 public:
  explicit NoFractureGraph(std::size_t label)
      : Error("no fracture graph: label " + std::to_string(label) +
              " does not split any orbit"),
        label_(label) {}
  std::size_t label() const { return label_; }

 private:
  std::size_t label_;
};

struct CrossingData {
  std::size_t n = 0;
  bool transitive = false;
  // Per label i: the 2-cycles of rho_i joining different G_i-orbits, sorted.
  std::vector<std::vector<PointPair>> pairs;
  // Per label i: the orbits of G_i.
  std::vector<Partition> label_orbits;
};

CrossingData crossing_data(const Sggi& s);

struct FractureComponent {
  std::vector<Point> vertices;
  std::size_t edge_count = 0;
  bool is_tree = false;
};

struct FractureGraph {
  enum class Kind { fracture, two_fracture };
  Kind kind = Kind::fracture;
  std::size_t n = 0;
  std::vector<Edge> edges;  // sorted by label, then endpoints
  std::size_t alternating_squares = 0;
  std::vector<FractureComponent> components;
};

// One crossing pair per label, the least one.
FractureGraph fracture_graph(const CrossingData& data);
// Two crossing pairs per label when every label has at least two, chosen to
// minimise alternating squares; ties go to the lexicographically least
// choice. Exact while every label has at most 12 candidates, greedy beyond.
std::optional<FractureGraph> two_fracture(const CrossingData& data);
std::optional<FractureGraph> two_fracture(const Sggi& s);

// Number of 4-cycles on four distinct vertices whose edges alternate
// between two labels.
std::size_t count_alternating_squares(const std::vector<Edge>& edges);
// Whether the edge lies on such a 4-cycle in the representation graph.
bool in_alternating_square(const Sggi& s, const Edge& e);

struct Split {
  std::size_t label = 0;
  Point a = 0, b = 0;               // a < b
  std::vector<Point> side_a, side_b;  // the G_i-orbits of a and b
  // Labels above i trivial on side_a and labels below i trivial on side_b
  // (forward), or the same with the sides exchanged (reverse).
  bool perfect_forward = false;
  bool perfect_reverse = false;
  std::vector<std::size_t> j_a, j_b;  // labels acting non-trivially on each side
  PermGroup action_a, action_b;       // on sides relabelled 0.. in increasing order

  bool perfect() const { return perfect_forward || perfect_reverse; }
};

struct SplitAnalysis {
  std::vector<Split> splits;
  std::size_t split_count = 0;
  std::size_t perfect_count = 0;
  bool has_two_fracture = false;
  // x_sets[l]: points moved by some generator with label > l;
  // y_sets[l]: points moved by some generator with label < l.
  std::vector<std::vector<Point>> x_sets, y_sets;
};

SplitAnalysis find_splits(const Sggi& s);
SplitAnalysis find_splits(const Sggi& s, const CrossingData& data);

enum class Hypothesis { no_fracture, has_two_fracture, all_splits_perfect, some_split_non_perfect };
std::string to_string(Hypothesis h);

// For a split that is not perfect: the largest and least labels acting
// non-trivially on both sides. Reported for information only.
struct NonPerfectSplitInfo {
  std::size_t label = 0;
  std::optional<std::size_t> h, g;
};

struct HypothesisProfile {
  Hypothesis tag = Hypothesis::no_fracture;
  bool transitive = false;
  bool even = false;
  std::optional<std::size_t> no_fracture_label;
  std::vector<NonPerfectSplitInfo> informational;
};

HypothesisProfile hypothesis_profile(const Sggi& s);

}  // namespace sggi
