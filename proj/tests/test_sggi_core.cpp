#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "sggi/errors.hpp"
#include "sggi/sggi.hpp"
#include "support.hpp"

using namespace sggi;
using test_support::perm;

namespace {

Sggi klein() {
  return Sggi(4, {perm(4, "(1 2)(3 4)"), perm(4, "(1 3)(2 4)"), perm(4, "(1 4)(2 3)")});
}

Sggi coxeter4() { return Sggi(4, {perm(4, "(1 2)"), perm(4, "(2 3)"), perm(4, "(3 4)")}); }

// Intersection property by explicit element sets of every G_I.
bool brute_intersection_property(const Sggi& s) {
  const std::size_t r = s.length();
  std::vector<std::set<Permutation>> sets;
  for (std::size_t mask = 0; mask < (1u << r); ++mask) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) gens.push_back(s[i]);
    auto e = test_support::closure(gens, s.degree());
    sets.emplace_back(e.begin(), e.end());
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      std::size_t common = 0;
      for (const auto& x : sets[a]) common += sets[b].count(x);
      if (common != sets[a & b].size()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate examples") {
  CHECK(validate(klein()).ok);
  CHECK(validate(coxeter4()).ok);
  auto bad = validate(4, {perm(4, "(1 2)"), perm(4, "(3 4)"), perm(4, "(2 3)")});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.violations.size() == 1);
  CHECK(bad.violations[0] == Violation{Violation::Kind::commuting, 0, 2});
  auto kinds = validate(3, {perm(3, "()"), perm(3, "(1 2 3)")});
  REQUIRE(kinds.violations.size() == 2);
  CHECK(kinds.violations[0].kind == Violation::Kind::identity_generator);
  CHECK(kinds.violations[1].kind == Violation::Kind::non_involution);
  CHECK_THROWS_AS(validate(4, {perm(5, "(1 2)")}), DegreeMismatch);
}

TEST_CASE("adjacent generators may commute") {
  CHECK(validate(4, {perm(4, "(1 2)"), perm(4, "(3 4)")}).ok);
}

TEST_CASE("independence examples") {
  CHECK(is_independent(coxeter4()).independent);
  auto k = is_independent(klein());
  CHECK_FALSE(k.independent);
  CHECK(k.redundant_index == 2);
  CHECK(is_independent(Sggi(3, {perm(3, "(1 2)")})).independent);
}

TEST_CASE("subgroup selectors") {
  auto c = coxeter4();
  CHECK(subgroup(c, Selector::drop({1})).order() == 4);
  CHECK(subgroup(c, Selector::below(2)).order() == 6);
  CHECK(subgroup(c, Selector::above(0)).order() == 6);
  CHECK(subgroup(c, Selector::all()).order() == 24);
  CHECK(subgroup(c, Selector::subset({})).order() == 1);
  CHECK(subgroup(c, Selector::below(0)).order() == 1);
  CHECK_THROWS_AS(subgroup(c, Selector::drop({3})), InvalidArgument);
  CHECK_THROWS_AS(subgroup(c, Selector::subset({0, 5})), InvalidArgument);
}

TEST_CASE("dual examples") {
  auto d = dual(coxeter4());
  CHECK(d.gens() == std::vector<Permutation>{perm(4, "(3 4)"), perm(4, "(2 3)"), perm(4, "(1 2)")});
  CHECK(dual(d) == coxeter4());
  CHECK(d.length() == 3);
}

TEST_CASE("intersection property examples") {
  CHECK(intersection_property(coxeter4()).holds);
  auto k = intersection_property(klein());
  CHECK_FALSE(k.holds);
  REQUIRE(k.failing.has_value());
  CHECK(k.failing->first == std::vector<std::size_t>{0, 1});
  CHECK(k.failing->second == std::vector<std::size_t>{2});
  CHECK(intersection_property(Sggi(3, {perm(3, "(1 2)")})).holds);
  std::vector<Permutation> many(13, perm(3, "(1 2)"));
  CHECK_THROWS_AS(intersection_property(Sggi(3, many)), InvalidArgument);
}

TEST_CASE("string properties over random small strings") {
  std::mt19937 rng(29);
  std::map<std::size_t, std::vector<Permutation>> pools;
  for (std::size_t n = 3; n <= 6; ++n) pools[n] = test_support::brute_involutions(n);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 3 + rng() % 4, r = 1 + rng() % 4;
    auto gens = test_support::random_string(rng, pools[n], r);
    if (gens.empty()) continue;
    Sggi s(n, gens);
    REQUIRE(validate(s).ok);
    ++checked;

    // validate commutes with reversal
    CHECK(validate(dual(s)).ok);
    CHECK(dual(dual(s)) == s);

    auto ind = is_independent(s);
    if (!ind.independent) {
      CHECK(subgroup(s, Selector::drop({*ind.redundant_index})).order() == s.group().order());
    } else {
      for (std::size_t k = 0; k < r; ++k)
        CHECK(subgroup(s, Selector::drop({k})).order() < s.group().order());
    }

    // deleting a generator keeps the commuting property
    for (std::size_t k = 0; k < r; ++k) {
      std::vector<Permutation> rest;
      for (std::size_t j = 0; j < r; ++j)
        if (j != k) rest.push_back(s[j]);
      CHECK(validate(n, rest).ok);
    }

    CHECK(intersection_property(s).holds == brute_intersection_property(s));
  }
  CHECK(checked > 200);
}

TEST_CASE("violations correspond under reversal") {
  std::mt19937 rng(31);
  auto pool = test_support::brute_involutions(5);
  pool.push_back(perm(5, "(1 2 3)"));
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 2 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < r; ++i) gens.push_back(pool[rng() % pool.size()]);
    auto a = validate(5, gens);
    std::vector<Permutation> rev(gens.rbegin(), gens.rend());
    auto b = validate(5, rev);
    std::multiset<std::tuple<int, std::size_t, std::size_t>> ma, mb;
    for (auto v : a.violations) ma.insert({int(v.kind), v.i, v.j});
    for (auto v : b.violations) {
      std::size_t i = r - 1 - v.j, j = r - 1 - v.i;
      mb.insert({int(v.kind), i, j});
    }
    CHECK(ma == mb);
  }
}

TEST_CASE("sggi text format") {
  auto c = coxeter4();
  CHECK(format_sggi(c) == "4 3\n(1 2)\n(2 3)\n(3 4)\n");
  CHECK(parse_sggi(format_sggi(c)) == c);
  CHECK(parse_sggi("4 1\n  (1 2) (3 4)\n\n") == Sggi(4, {perm(4, "(1 2)(3 4)")}));
  CHECK_THROWS_AS(parse_sggi("4 2\n(1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_sggi("4\n(1 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_sggi("x 1\n(1 2)\n"), ParseError);
}
