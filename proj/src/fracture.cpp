#include "sggi/fracture.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <tuple>

namespace sggi {
namespace {

std::vector<std::size_t> cell_index(const Partition& cells, std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (Point x : cells[c]) idx[x] = c;
  }
  return idx;
}

std::vector<Permutation> without(const Sggi& s, std::size_t i) {
  std::vector<Permutation> out;
  for (std::size_t j = 0; j < s.length(); ++j) {
    if (j != i) out.push_back(s[j]);
  }
  return out;
}

std::vector<FractureComponent> components_of(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(n, false);
  for (const auto& e : edges) {
    touched[e.u] = touched[e.v] = true;
    std::size_t a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<FractureComponent> comps;
  std::vector<std::int64_t> comp_of(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    if (!touched[x]) continue;
    std::size_t root = find(x);
    if (comp_of[root] < 0) {
      comp_of[root] = static_cast<std::int64_t>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(comp_of[root])].vertices.push_back(static_cast<Point>(x));
  }
  for (const auto& e : edges) ++comps[static_cast<std::size_t>(comp_of[find(e.u)])].edge_count;
  for (auto& c : comps) c.is_tree = c.edge_count + 1 == c.vertices.size();
  return comps;
}

FractureGraph make_graph(FractureGraph::Kind kind, std::size_t n, std::vector<Edge> edges) {
  FractureGraph g;
  g.kind = kind;
  g.n = n;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.label, a.u, a.v) < std::tie(b.label, b.u, b.v);
  });
  g.alternating_squares = count_alternating_squares(edges);
  g.components = components_of(n, edges);
  g.edges = std::move(edges);
  return g;
}

// A choice of two crossing pairs for one label.
struct PairChoice {
  PointPair first, second;
  std::array<Point, 4> vertices;  // sorted
};

// Whether an i-choice and a j-choice form an alternating square: the same
// four vertices matched in two different ways.
bool forms_square(const PairChoice& x, const PairChoice& y) {
  if (x.vertices != y.vertices) return false;
  auto key = [](const PairChoice& c) {
    return std::minmax(c.first, c.second);
  };
  return key(x) != key(y);
}

}  // namespace

CrossingData crossing_data(const Sggi& s) {
  CrossingData data;
  data.n = s.degree();
  std::size_t whole = orbits(s.gens(), s.degree()).size();
  data.transitive = whole == 1;
  for (std::size_t i = 0; i < s.length(); ++i) {
    Partition cells = orbits(without(s, i), s.degree());
    if (cells.size() <= whole) throw NoFractureGraph(i);
    auto idx = cell_index(cells, s.degree());
    std::vector<PointPair> pairs;
    for (const auto& c : s[i].cycles()) {
      if (c.size() == 2 && idx[c[0]] != idx[c[1]]) pairs.emplace_back(c[0], c[1]);
    }
    std::sort(pairs.begin(), pairs.end());
    data.pairs.push_back(std::move(pairs));
    data.label_orbits.push_back(std::move(cells));
  }
  return data;
}

std::size_t count_alternating_squares(const std::vector<Edge>& edges) {
  std::size_t n = 0, r = 0;
  for (const auto& e : edges) {
    n = std::max<std::size_t>(n, e.v + 1);
    r = std::max(r, e.label + 1);
  }
  std::vector<std::vector<std::int32_t>> mate(r, std::vector<std::int32_t>(n, -1));
  for (const auto& e : edges) {
    mate[e.label][e.u] = e.v;
    mate[e.label][e.v] = e.u;
  }
  std::size_t twice = 0;
  for (const auto& e : edges) {
    for (std::size_t j = 0; j < r; ++j) {
      if (j == e.label) continue;
      std::int32_t c = mate[j][e.v], d = mate[j][e.u];
      if (c < 0 || d < 0 || c == e.u || d == e.v) continue;
      if (mate[e.label][static_cast<std::size_t>(c)] == d) ++twice;
    }
  }
  // Each square is seen from both of its edges of each label.
  return twice / 4;
}

bool in_alternating_square(const Sggi& s, const Edge& e) {
  const Permutation& ri = s[e.label];
  for (std::size_t j = 0; j < s.length(); ++j) {
    if (j == e.label) continue;
    Point c = s[j](e.v), d = s[j](e.u);
    if (c == e.v || d == e.u || c == e.u || d == e.v) continue;
    if (ri(c) == d) return true;
  }
  return false;
}

FractureGraph fracture_graph(const CrossingData& data) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < data.pairs.size(); ++i) {
    const auto& p = data.pairs[i].front();
    edges.push_back({p.first, p.second, i});
  }
  return make_graph(FractureGraph::Kind::fracture, data.n, std::move(edges));
}

std::optional<FractureGraph> two_fracture(const CrossingData& data) {
  const std::size_t r = data.pairs.size();
  std::size_t widest = 0;
  for (const auto& p : data.pairs) {
    if (p.size() < 2) return std::nullopt;
    widest = std::max(widest, p.size());
  }
  std::vector<std::vector<PairChoice>> choices(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& p = data.pairs[i];
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = a + 1; b < p.size(); ++b) {
        PairChoice c{p[a], p[b], {p[a].first, p[a].second, p[b].first, p[b].second}};
        std::sort(c.vertices.begin(), c.vertices.end());
        choices[i].push_back(c);
      }
    }
  }

  std::vector<std::size_t> pick(r, 0), best;
  std::size_t best_cost = SIZE_MAX;
  auto cost_with_earlier = [&](std::size_t i, std::size_t k) {
    std::size_t c = 0;
    for (std::size_t j = 0; j < i; ++j) c += forms_square(choices[i][k], choices[j][pick[j]]);
    return c;
  };

  if (widest <= 12) {
    // Branch and bound in lexicographic order; the first optimum found is
    // the lexicographically least one.
    std::size_t nodes = 0;
    const std::size_t node_cap = 5000000;
    auto rec = [&](auto&& self, std::size_t i, std::size_t cost) -> void {
      if (cost >= best_cost || best_cost == 0 || nodes > node_cap) return;
      if (i == r) {
        best_cost = cost;
        best = pick;
        return;
      }
      for (std::size_t k = 0; k < choices[i].size(); ++k) {
        ++nodes;
        pick[i] = k;
        self(self, i + 1, cost + cost_with_earlier(i, k));
        if (best_cost == 0) return;
      }
    };
    rec(rec, 0, 0);
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t best_k = 0, best_c = SIZE_MAX;
      for (std::size_t k = 0; k < choices[i].size(); ++k) {
        std::size_t c = cost_with_earlier(i, k);
        if (c < best_c) {
          best_c = c;
          best_k = k;
        }
      }
      pick[i] = best_k;
    }
    best = pick;
  }

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& c = choices[i][best[i]];
    edges.push_back({c.first.first, c.first.second, i});
    edges.push_back({c.second.first, c.second.second, i});
  }
  return make_graph(FractureGraph::Kind::two_fracture, data.n, std::move(edges));
}

std::optional<FractureGraph> two_fracture(const Sggi& s) { return two_fracture(crossing_data(s)); }

namespace {

bool trivial_on(const Permutation& p, const std::vector<Point>& side) {
  return std::all_of(side.begin(), side.end(), [&](Point x) { return p(x) == x; });
}

PermGroup restricted_action(const Sggi& s, const std::vector<std::size_t>& labels,
                            const std::vector<Point>& side) {
  std::vector<std::int32_t> local(s.degree(), -1);
  for (std::size_t k = 0; k < side.size(); ++k) local[side[k]] = static_cast<std::int32_t>(k);
  std::vector<Permutation> gens;
  for (std::size_t j : labels) {
    std::vector<Point> images(side.size());
    for (std::size_t k = 0; k < side.size(); ++k) {
      images[k] = static_cast<Point>(local[s[j](side[k])]);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(side.size(), std::move(gens));
}

std::vector<Point> moved_by(const Sggi& s, std::size_t from, std::size_t to) {
  std::vector<Point> out;
  for (std::size_t x = 0; x < s.degree(); ++x) {
    for (std::size_t j = from; j < to; ++j) {
      if (s[j](static_cast<Point>(x)) != x) {
        out.push_back(static_cast<Point>(x));
        break;
      }
    }
  }
  return out;
}

}  // namespace

SplitAnalysis find_splits(const Sggi& s) { return find_splits(s, crossing_data(s)); }

SplitAnalysis find_splits(const Sggi& s, const CrossingData& data) {
  SplitAnalysis out;
  const std::size_t r = s.length();
  out.has_two_fracture = std::all_of(data.pairs.begin(), data.pairs.end(),
                                     [](const auto& p) { return p.size() >= 2; });
  for (std::size_t i = 0; i < r; ++i) {
    if (data.pairs[i].size() != 1) continue;
    Split sp;
    sp.label = i;
    sp.a = data.pairs[i][0].first;
    sp.b = data.pairs[i][0].second;
    for (const auto& cell : data.label_orbits[i]) {
      if (std::find(cell.begin(), cell.end(), sp.a) != cell.end()) sp.side_a = cell;
      if (std::find(cell.begin(), cell.end(), sp.b) != cell.end()) sp.side_b = cell;
    }
    bool above_a = true, above_b = true, below_a = true, below_b = true;
    for (std::size_t j = 0; j < r; ++j) {
      if (j == i) continue;
      bool ta = trivial_on(s[j], sp.side_a), tb = trivial_on(s[j], sp.side_b);
      if (!ta) sp.j_a.push_back(j);
      if (!tb) sp.j_b.push_back(j);
      if (j > i) {
        above_a = above_a && ta;
        above_b = above_b && tb;
      } else {
        below_a = below_a && ta;
        below_b = below_b && tb;
      }
    }
    sp.perfect_forward = above_a && below_b;
    sp.perfect_reverse = above_b && below_a;
    sp.action_a = restricted_action(s, sp.j_a, sp.side_a);
    sp.action_b = restricted_action(s, sp.j_b, sp.side_b);
    out.perfect_count += sp.perfect();
    out.splits.push_back(std::move(sp));
  }
  out.split_count = out.splits.size();
  for (std::size_t l = 0; l < r; ++l) {
    out.x_sets.push_back(moved_by(s, l + 1, r));
    out.y_sets.push_back(moved_by(s, 0, l));
  }
  return out;
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::no_fracture:
      return "no-fracture";
    case Hypothesis::has_two_fracture:
      return "has-2-fracture";
    case Hypothesis::all_splits_perfect:
      return "all-splits-perfect";
    case Hypothesis::some_split_non_perfect:
      return "some-split-non-perfect";
  }
  return {};
}

HypothesisProfile hypothesis_profile(const Sggi& s) {
  HypothesisProfile p;
  p.transitive = orbits(s.gens(), s.degree()).size() == 1;
  p.even = all_even(s);
  CrossingData data;
  try {
    data = crossing_data(s);
  } catch (const NoFractureGraph& e) {
    p.tag = Hypothesis::no_fracture;
    p.no_fracture_label = e.label();
    return p;
  }
  SplitAnalysis sa = find_splits(s, data);
  if (sa.has_two_fracture) {
    p.tag = Hypothesis::has_two_fracture;
    return p;
  }
  p.tag = sa.perfect_count == sa.split_count ? Hypothesis::all_splits_perfect
                                             : Hypothesis::some_split_non_perfect;
  for (const auto& sp : sa.splits) {
    if (sp.perfect()) continue;
    NonPerfectSplitInfo info;
    info.label = sp.label;
    for (std::size_t j : sp.j_a) {
      if (std::find(sp.j_b.begin(), sp.j_b.end(), j) == sp.j_b.end()) continue;
      if (!info.g) info.g = j;
      info.h = j;
    }
    p.informational.push_back(info);
  }
  return p;
}

}  // namespace sggi
