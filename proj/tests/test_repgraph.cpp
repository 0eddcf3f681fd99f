#include <doctest.h>

#include <map>
#include <random>

#include "sggi/errors.hpp"
#include "sggi/repgraph.hpp"
#include "support.hpp"

using namespace sggi;
using test_support::perm;

namespace {

Sggi klein() {
  return Sggi(4, {perm(4, "(1 2)(3 4)"), perm(4, "(1 3)(2 4)"), perm(4, "(1 4)(2 3)")});
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("to_graph examples") {
  auto k = to_graph(klein());
  CHECK(k.edges().size() == 6);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k.edges_with_label(i).size() == 2);
  std::set<std::pair<Point, Point>> pairs;
  for (const auto& e : k.edges()) pairs.insert({e.u, e.v});
  CHECK(pairs.size() == 6);  // every pair of the 4 vertices

  auto c = to_graph(Sggi(4, {perm(4, "(1 2)"), perm(4, "(2 3)"), perm(4, "(3 4)")}));
  CHECK(c.edges() == std::set<Edge>{{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});

  auto single = to_graph(Sggi(4, {perm(4, "(1 2)(3 4)")}));
  CHECK(single.edges() == std::set<Edge>{{0, 1, 0}, {2, 3, 0}});

  auto fixed = to_graph(Sggi(5, {perm(5, "(1 2)")}));
  CHECK(fixed.n() == 5);
}

TEST_CASE("from_graph examples") {
  CHECK(from_graph(to_graph(klein())) == klein());
  RepGraph path(5, 2);
  path.add_edge(0, 1, 0);
  path.add_edge(1, 2, 1);
  path.add_edge(2, 3, 0);
  path.add_edge(3, 4, 1);
  CHECK(from_graph(path).gens() ==
        std::vector<Permutation>{perm(5, "(1 2)(3 4)"), perm(5, "(2 3)(4 5)")});

  RepGraph bad(3, 1);
  bad.add_edge(0, 1, 0);
  CHECK_THROWS_AS(bad.add_edge(1, 2, 0), InvalidArgument);

  RepGraph empty_label(3, 2);
  empty_label.add_edge(0, 1, 0);
  CHECK_THROWS_AS(from_graph(empty_label), InvalidArgument);
}

TEST_CASE("doubled edges carry distinct labels") {
  RepGraph g(3, 2);
  g.add_edge(0, 1, 0);
  g.add_edge(1, 0, 1);
  CHECK(g.edges().size() == 2);
  CHECK_THROWS_AS(g.add_edge(0, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(g.add_edge(2, 2, 0), InvalidArgument);
}

TEST_CASE("text format and dot export") {
  auto k = to_graph(klein());
  std::string t = format_graph(k);
  CHECK(t == "graph 4 3\n1 2 0\n1 3 1\n1 4 2\n2 3 2\n2 4 1\n3 4 0\n");
  CHECK(parse_graph(t) == k);
  CHECK(format_graph(parse_graph(t)) == t);
  std::string dot = export_dot(k);
  CHECK(count(dot, " -- ") == 6);
  for (int l = 0; l < 3; ++l) CHECK(count(dot, "label=\"" + std::to_string(l) + "\"") == 2);
  CHECK(count(dot, "color=") == 6);

  CHECK_THROWS_AS(parse_graph("graph 5 1\n5 5 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 5 1\n1 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 5 1\n1 2 0\n2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 5 1\n1 2 0\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 5 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("grph 5 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph 5 1\n1 9 0\n"), ParseError);
}

TEST_CASE("graph round trips and connectivity over random strings") {
  std::mt19937 rng(41);
  std::map<std::size_t, std::vector<Permutation>> pools;
  for (std::size_t n = 3; n <= 7; ++n) pools[n] = test_support::brute_involutions(n);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 3 + rng() % 5, r = 1 + rng() % 4;
    auto gens = test_support::random_string(rng, pools[n], r);
    if (gens.empty()) continue;
    Sggi s(n, gens);
    RepGraph g = to_graph(s);
    CHECK(from_graph(g) == s);
    CHECK(parse_graph(format_graph(g)) == g);
    std::size_t two_cycles = 0;
    for (const auto& x : s.gens()) two_cycles += x.cycles().size();
    CHECK(g.edges().size() == two_cycles);
    CHECK(g.is_connected() == s.group().is_transitive());
  }
}

TEST_CASE("relabel") {
  auto k = to_graph(klein());
  auto moved = relabel(k, {2, 1, 0}, 3);
  CHECK(from_graph(moved).gens()[0] == klein()[2]);
  CHECK_THROWS_AS(relabel(k, {0, 1}, 3), InvalidArgument);
}
