#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sggi/permutation.hpp"
#include "sggi/sggi.hpp"

namespace sggi {

struct Edge {
  Point u;  // u < v
  Point v;
  std::size_t label;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Edge-labelled multigraph on n vertices with labels 0..r-1, where the
// edges of each label form a partial matching.
class RepGraph {
 public:
  RepGraph() = default;
  RepGraph(std::size_t n, std::size_t r);

  // Endpoints may be given in either order; throws on a loop, a label or
  // vertex out of range, a repeated (u, v, label) or a matching violation.
  void add_edge(Point a, Point b, std::size_t label);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::vector<Edge> edges_with_label(std::size_t label) const;
  bool is_connected() const;  // ignoring labels

  friend bool operator==(const RepGraph&, const RepGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<std::int32_t>> mate_;  // mate_[label][vertex] or -1
};

RepGraph to_graph(const Sggi& s);
// Throws if some label carries no edge.
Sggi from_graph(const RepGraph& g);

// Native format: "graph n r", then "u v label" per edge with 1-based
// vertices, sorted.
std::string format_graph(const RepGraph& g);
RepGraph parse_graph(std::string_view text);
std::string export_dot(const RepGraph& g);

// Label i becomes label_map[i]; the result has new_r labels.
RepGraph relabel(const RepGraph& g, const std::vector<std::size_t>& label_map, std::size_t new_r);

}  // namespace sggi
