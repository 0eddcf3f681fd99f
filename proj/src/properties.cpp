#include "sggi/properties.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "sggi/fracture.hpp"

namespace sggi {
namespace {

PropertyCheck make(std::string name, bool applicable, bool holds, std::string detail) {
  return {std::move(name), applicable, applicable ? holds : true, std::move(detail)};
}

bool is_interval(const std::vector<std::size_t>& labels) {
  return labels.empty() || labels.back() - labels.front() + 1 == labels.size();
}

std::string list(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << '}';
  return os.str();
}

// Points reachable from start without entering banned_vertex and without
// using edges labelled f or m.
std::vector<bool> reachable(const Sggi& s, Point start, Point banned_vertex, std::size_t f,
                            std::size_t m) {
  std::vector<bool> seen(s.degree(), false);
  seen[start] = true;
  seen[banned_vertex] = true;
  std::queue<Point> q;
  q.push(start);
  while (!q.empty()) {
    Point x = q.front();
    q.pop();
    for (std::size_t j = 0; j < s.length(); ++j) {
      if (j == f || j == m) continue;
      Point y = s[j](x);
      if (!seen[y]) {
        seen[y] = true;
        q.push(y);
      }
    }
  }
  seen[banned_vertex] = false;
  return seen;
}

// Whether another generator with label at distance at least 2 swaps the same
// two points: a square whose opposite edges coincide.
bool in_doubled_square(const Sggi& s, const Edge& e) {
  for (std::size_t j = 0; j < s.length(); ++j) {
    if (j + 1 < e.label || j > e.label + 1) {
      if (s[j](e.u) == e.v) return true;
    }
  }
  return false;
}

}  // namespace

bool path_labels_hold(const Sggi& s, std::string* detail) {
  const std::size_t r = s.length();
  // A simple path u, v, ... avoiding f-edges and m-edges ends with an l-edge
  // exactly when some l-edge {x, y} has x reachable from v in the graph
  // without u, and y != u.
  for (std::size_t f = 0; f < r; ++f) {
    for (const auto& c : s[f].cycles()) {
      if (c.size() != 2) continue;
      Edge e{c[0], c[1], f};
      if (in_alternating_square(s, e) || in_doubled_square(s, e)) continue;
      for (int side = 0; side < 2; ++side) {
        Point u = side ? c[1] : c[0];
        Point v = side ? c[0] : c[1];
        for (std::size_t m = 0; m < r; ++m) {
          if (m == f) continue;
          auto seen = reachable(s, v, u, f, m);
          for (std::size_t l = 0; l < r; ++l) {
            if ((m < f && l >= m) || (m > f && l <= m)) continue;
            for (std::size_t x = 0; x < s.degree(); ++x) {
              Point y = s[l](static_cast<Point>(x));
              if (!seen[x] || y == x || y == u) continue;
              if (detail) {
                std::ostringstream os;
                os << "edge {" << c[0] + 1 << "," << c[1] + 1 << "} label " << f
                   << " reaches a label " << l << " edge at point " << x + 1
                   << " without label " << m << ", which lies between " << std::min(f, l)
                   << " and " << std::max(f, l);
                *detail = os.str();
              }
              return false;
            }
          }
        }
      }
    }
  }
  return true;
}

std::vector<PropertyCheck> check_properties(const Sggi& s) {
  std::vector<PropertyCheck> out;
  const std::size_t n = s.degree(), r = s.length();
  const bool transitive = orbits(s.gens(), n).size() == 1;
  const bool independent = is_independent(s).independent;
  const bool base = transitive && independent;
  const bool even = all_even(s);

  std::optional<CrossingData> data;
  try {
    data = crossing_data(s);
  } catch (const NoFractureGraph&) {
  }

  if (data) {
    FractureGraph fg = fracture_graph(*data);
    bool forest = std::all_of(fg.components.begin(), fg.components.end(),
                              [](const auto& c) { return c.is_tree; });
    out.push_back(make("fracture_forest", true, fg.edges.size() == r && forest,
                       std::to_string(fg.edges.size()) + " edges, " +
                           std::to_string(fg.components.size()) + " components"));
  } else {
    out.push_back(make("fracture_forest", false, true, "no fracture graph"));
  }

  const bool two = data && two_fracture(*data).has_value();
  out.push_back(make("two_fracture_rank_bound", base && two, 2 * r <= n,
                     "r=" + std::to_string(r) + " n=" + std::to_string(n)));

  SplitAnalysis sa;
  if (data) sa = find_splits(s, *data);
  std::vector<std::size_t> perfect_labels;
  for (const auto& sp : sa.splits) {
    if (sp.perfect()) perfect_labels.push_back(sp.label);
  }

  const bool primitive_applies = base && !perfect_labels.empty();
  out.push_back(make("perfect_split_primitive", primitive_applies,
                     primitive_applies && is_primitive(s.group()),
                     "perfect splits at " + list(perfect_labels)));

  const bool all_perfect = data && !two && sa.split_count > 0 &&
                           sa.perfect_count == sa.split_count;
  const bool hyp_perfect = base && even && all_perfect;
  bool bad_label = std::any_of(perfect_labels.begin(), perfect_labels.end(),
                               [&](std::size_t i) { return i == 1 || i + 2 == r; });
  out.push_back(make("perfect_split_labels", hyp_perfect, !bad_label,
                     "perfect splits at " + list(perfect_labels)));
  bool four = false;
  for (std::size_t k = 0; k + 3 < perfect_labels.size(); ++k) {
    four = four || perfect_labels[k + 3] == perfect_labels[k] + 3;
  }
  out.push_back(make("no_four_consecutive_perfect_splits", hyp_perfect, !four,
                     "perfect splits at " + list(perfect_labels)));
  const std::size_t sc = sa.split_count;
  out.push_back(make("split_count_bound", hyp_perfect, 3 * sc <= 2 * r,
                     "s=" + std::to_string(sc) + " r=" + std::to_string(r)));
  out.push_back(make("rank_split_bound", hyp_perfect, 4 * r + 2 <= 2 * n + sc,
                     "r=" + std::to_string(r) + " n=" + std::to_string(n) +
                         " s=" + std::to_string(sc)));

  const bool hyp_non_perfect = base && even && data && !two && sa.perfect_count < sa.split_count;
  bool interval_ok = true, imprimitive_ok = true, any_imprimitive_pair = false;
  std::string interval_detail, imprimitive_detail;
  for (const auto& sp : sa.splits) {
    if (sp.perfect()) continue;
    bool prim_a = is_primitive(sp.action_a), prim_b = is_primitive(sp.action_b);
    if (prim_a && !is_interval(sp.j_a)) {
      interval_ok = false;
      interval_detail = "split " + std::to_string(sp.label) + ": J_A=" + list(sp.j_a);
    }
    if (prim_b && !is_interval(sp.j_b)) {
      interval_ok = false;
      interval_detail = "split " + std::to_string(sp.label) + ": J_B=" + list(sp.j_b);
    }
    if (!prim_a && !prim_b) {
      any_imprimitive_pair = true;
      if (2 * r + 1 > n) {
        imprimitive_ok = false;
        imprimitive_detail = "split " + std::to_string(sp.label) + ": r=" + std::to_string(r);
      }
    }
  }
  out.push_back(make("primitive_side_interval", hyp_non_perfect, interval_ok, interval_detail));
  out.push_back(make("imprimitive_sides_rank_bound", hyp_non_perfect && any_imprimitive_pair,
                     imprimitive_ok, imprimitive_detail));

  const bool paths_apply = base;
  std::string path_detail;
  bool paths = !paths_apply || path_labels_hold(s, &path_detail);
  out.push_back(make("path_labels", paths_apply, paths, path_detail));
  return out;
}

}  // namespace sggi
