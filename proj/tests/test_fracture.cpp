#include <doctest.h>

#include <random>
#include <set>

#include "sggi/fracture.hpp"
#include "sggi/properties.hpp"
#include "sggi/repgraph.hpp"
#include "support.hpp"

using namespace sggi;
using test_support::perm;

namespace {

Sggi klein() {
  return Sggi(4, {perm(4, "(1 2)(3 4)"), perm(4, "(1 3)(2 4)"), perm(4, "(1 4)(2 3)")});
}

Sggi coxeter4() { return Sggi(4, {perm(4, "(1 2)"), perm(4, "(2 3)"), perm(4, "(3 4)")}); }

Sggi graph(std::size_t n, std::size_t r, const std::vector<Edge>& edges) {
  RepGraph g(n, r);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.label);
  return from_graph(g);
}

// Ladder with top t0..t2, bottom b0..b2 (points 0..2 and 3..5), horizontal
// labels 2 then 1 and rungs labelled 0.
Sggi ladder3() {
  return graph(6, 3, {{0, 1, 2}, {1, 2, 1}, {3, 4, 2}, {4, 5, 1}, {0, 3, 0}, {1, 4, 0}, {2, 5, 0}});
}

// Path labels by listing every simple path.
bool brute_path_labels(const Sggi& s) {
  const std::size_t n = s.degree(), r = s.length();
  bool ok = true;
  std::vector<bool> on(n, false);
  std::vector<int> used(r, 0);
  auto dfs = [&](auto&& self, Point at, std::size_t f) -> void {
    for (std::size_t l = 0; l < r && ok; ++l) {
      if (l == f) continue;
      Point y = s[l](at);
      if (y == at || on[y]) continue;
      for (std::size_t m = std::min(l, f) + 1; m < std::max(l, f); ++m) {
        if (!used[m]) ok = false;
      }
      on[y] = true;
      ++used[l];
      self(self, y, f);
      --used[l];
      on[y] = false;
    }
  };
  for (std::size_t f = 0; f < r && ok; ++f) {
    for (const auto& c : s[f].cycles()) {
      if (c.size() != 2 || in_alternating_square(s, {c[0], c[1], f})) continue;
      bool doubled = false;
      for (std::size_t j = 0; j < r; ++j) {
        if ((j + 1 < f || j > f + 1) && s[j](c[0]) == c[1]) doubled = true;
      }
      if (doubled) continue;
      for (int side = 0; side < 2; ++side) {
        on.assign(n, false);
        on[c[0]] = on[c[1]] = true;
        dfs(dfs, side ? c[0] : c[1], f);
      }
    }
  }
  return ok;
}

}  // namespace

TEST_CASE("crossing pairs") {
  auto data = crossing_data(coxeter4());
  REQUIRE(data.pairs.size() == 3);
  CHECK(data.pairs[1] == std::vector<PointPair>{{1, 2}});
  CHECK(data.transitive);

  CHECK_THROWS_AS(crossing_data(klein()), NoFractureGraph);
  try {
    crossing_data(klein());
  } catch (const NoFractureGraph& e) {
    CHECK(e.label() == 0);
  }

  Sggi path = graph(5, 2, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 1}});
  auto pd = crossing_data(path);
  CHECK(pd.pairs[0].size() == 2);
  CHECK(pd.pairs[1].size() == 2);
}

TEST_CASE("fracture and 2-fracture graphs") {
  auto cox = fracture_graph(crossing_data(coxeter4()));
  CHECK(cox.edges.size() == 3);
  CHECK(cox.components.size() == 1);
  CHECK(cox.components[0].is_tree);
  CHECK_FALSE(two_fracture(coxeter4()).has_value());

  Sggi path = graph(5, 2, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 4, 1}});
  auto two = two_fracture(path);
  REQUIRE(two.has_value());
  CHECK(two->edges.size() == 4);
  CHECK(two->alternating_squares == 0);

  auto lad = two_fracture(ladder3());
  REQUIRE(lad.has_value());
  CHECK(lad->edges.size() == 6);
  CHECK(lad->components.size() == 1);
  CHECK(lad->alternating_squares == 0);
}

TEST_CASE("alternating squares") {
  std::vector<Edge> square{{0, 1, 0}, {2, 3, 0}, {0, 3, 1}, {1, 2, 1}};
  CHECK(count_alternating_squares(square) == 1);
  std::vector<Edge> doubled{{0, 1, 0}, {0, 1, 1}};
  CHECK(count_alternating_squares(doubled) == 0);
  Sggi lad = ladder3();
  CHECK(in_alternating_square(lad, {0, 3, 0}));
  CHECK(in_alternating_square(lad, {0, 1, 2}));
  CHECK_FALSE(in_alternating_square(coxeter4(), {1, 2, 1}));
}

TEST_CASE("splits of the Coxeter string") {
  auto sa = find_splits(coxeter4());
  REQUIRE(sa.split_count == 3);
  CHECK(sa.splits[0].label == 0);
  CHECK(sa.splits[1].label == 1);
  CHECK(sa.splits[2].label == 2);
  const Split& mid = sa.splits[1];
  CHECK(mid.a == 1);
  CHECK(mid.b == 2);
  CHECK(mid.side_a == std::vector<Point>{0, 1});
  CHECK(mid.side_b == std::vector<Point>{2, 3});
  CHECK(mid.perfect());
  CHECK(mid.perfect_forward);
  CHECK(mid.j_a == std::vector<std::size_t>{0});
  CHECK(mid.j_b == std::vector<std::size_t>{2});
  CHECK(mid.action_a.order() == 2);
  CHECK(sa.perfect_count == 3);
  CHECK(sa.x_sets[2].empty());
  CHECK(sa.y_sets[0].empty());
  CHECK(sa.x_sets[0] == std::vector<Point>{1, 2, 3});
}

TEST_CASE("hypothesis profiles") {
  auto k = hypothesis_profile(klein());
  CHECK(k.tag == Hypothesis::no_fracture);
  CHECK(k.no_fracture_label == std::optional<std::size_t>{0});

  auto c = hypothesis_profile(coxeter4());
  CHECK(c.tag == Hypothesis::all_splits_perfect);
  CHECK(c.transitive);
  CHECK_FALSE(c.even);

  auto l = hypothesis_profile(ladder3());
  CHECK(l.tag == Hypothesis::has_two_fracture);
  CHECK(to_string(l.tag) == "has-2-fracture");
}

TEST_CASE("property checks on small examples") {
  for (const auto& check : check_properties(coxeter4())) {
    CHECK_MESSAGE(check.holds, check.name << ": " << check.detail);
  }
  auto checks = check_properties(ladder3());
  for (const auto& check : checks) CHECK_MESSAGE(check.holds, check.name);
  auto rank = std::find_if(checks.begin(), checks.end(),
                           [](const auto& c) { return c.name == "two_fracture_rank_bound"; });
  REQUIRE(rank != checks.end());
  CHECK(rank->applicable);
}

TEST_CASE("path labels agree with path enumeration") {
  std::mt19937 rng(7);
  std::size_t failures = 0, total = 0;
  for (std::size_t n = 4; n <= 7; ++n) {
    auto pool = test_support::brute_involutions(n);
    for (int trial = 0; trial < 120; ++trial) {
      std::size_t r = 2 + rng() % 4;
      // Strings with the commuting property, and arbitrary involution lists
      // to reach inputs where some path misses a label.
      auto gens = test_support::random_string(rng, pool, r);
      if (gens.empty()) continue;
      std::vector<Permutation> loose;
      for (std::size_t k = 0; k < r; ++k) loose.push_back(pool[rng() % pool.size()]);
      for (const auto& list : {gens, loose}) {
        Sggi s(n, list);
        bool fast = path_labels_hold(s);
        CHECK(fast == brute_path_labels(s));
        if (validate(s).ok) CHECK(fast);
        failures += !fast;
        ++total;
      }
    }
  }
  // Both outcomes must be exercised.
  CHECK(failures > 0);
  CHECK(failures < total);
}

TEST_CASE("path labels skip edges doubled with a distant label") {
  // Edge {8,10} carries labels 1 and 3; the path 10-8-7-9 has labels 1, 0, 3.
  Sggi s = parse_sggi("10 4\n(7 8)(9 10)\n(3 4)(5 7)(6 9)(8 10)\n(1 3)(2 5)\n(1 2)(5 6)(7 9)(8 10)\n");
  CHECK(hypothesis_profile(s).tag == Hypothesis::some_split_non_perfect);
  CHECK(path_labels_hold(s));
  CHECK(brute_path_labels(s));
}

TEST_CASE("fracture graph is a forest on random strings") {
  std::mt19937 rng(11);
  std::size_t seen = 0;
  for (std::size_t n = 4; n <= 7; ++n) {
    auto pool = test_support::brute_involutions(n);
    for (int trial = 0; trial < 100; ++trial) {
      auto gens = test_support::random_string(rng, pool, 2 + rng() % 4);
      if (gens.empty()) continue;
      Sggi s(n, gens);
      CrossingData data;
      try {
        data = crossing_data(s);
      } catch (const NoFractureGraph&) {
        continue;
      }
      ++seen;
      auto fg = fracture_graph(data);
      CHECK(fg.edges.size() == s.length());
      for (const auto& c : fg.components) CHECK(c.is_tree);
      for (const auto& sp : find_splits(s, data).splits) {
        CHECK_FALSE(in_alternating_square(s, {sp.a, sp.b, sp.label}));
      }
    }
  }
  CHECK(seen > 50);
}
