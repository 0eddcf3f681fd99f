#include <doctest.h>

#include <fstream>
#include <sstream>

#include "sggi/constructions.hpp"
#include "sggi/errors.hpp"
#include "sggi/fracture.hpp"
#include "sggi/properties.hpp"

using namespace sggi;

namespace {

std::string split_summary(const Sggi& s) {
  std::string out = to_string(hypothesis_profile(s).tag) + ":";
  for (const auto& sp : find_splits(s).splits) {
    out += " " + std::to_string(sp.label) + (sp.perfect_forward ? "f" : "") +
           (sp.perfect_reverse ? "r" : "") + "[" + std::to_string(sp.side_a.size()) + "/" +
           std::to_string(sp.side_b.size()) + "]";
  }
  return out;
}

}  // namespace

TEST_CASE("family minima and ranks") {
  CHECK(alt_family_minimum(0) == 10);
  CHECK(alt_family_minimum(1) == 11);
  CHECK(alt_family_minimum(2) == 22);
  CHECK(alt_family_minimum(3) == 18);
  CHECK(alt_family_minimum(4) == 14);
  CHECK_FALSE(alt_family_defined(9));
  CHECK_FALSE(alt_family_defined(12));
  CHECK(alt_family_defined(14));
  CHECK(alt_family_rank(10) == 5);
  CHECK(alt_family_rank(14) == 7);
  CHECK(alt_family_rank(22) == 11);
  CHECK(alt_family_rank(23) == 12);
  CHECK_THROWS_AS(alt_family(9), InvalidArgument);
  CHECK_THROWS_AS(alt_family(17), InvalidArgument);
}

TEST_CASE("family members generate the alternating group") {
  for (std::size_t n : {10, 11, 14, 15, 16, 18, 22}) {
    CAPTURE(n);
    Sggi s = alt_family(n);
    CHECK(s.length() == alt_family_rank(n));
    CHECK(validate(s).ok);
    CHECK(is_independent(s).independent);
    CHECK(all_even(s));
    CHECK(s.group().order() == factorial(n) / 2);
    RepGraph g = to_graph(s);
    CHECK(g.n() == n);
    std::vector<std::size_t> per_label(s.length(), 0);
    for (const auto& e : g.edges()) ++per_label[e.label];
    for (auto c : per_label) CHECK(c >= 2);
  }
  CHECK(alt_family(10).group().order() == 1814400);
}

TEST_CASE("family split classification snapshot") {
  CHECK(split_summary(alt_family(10)) == "all-splits-perfect: 2f[5/5] 4f[9/1]");
  CHECK(split_summary(alt_family(11)) == "all-splits-perfect: 0f[1/10] 2f[5/6] 3f[6/5] 5f[10/1]");
  CHECK(split_summary(alt_family(14)) == "all-splits-perfect: 4f[9/5] 6f[13/1]");
  CHECK(split_summary(alt_family(18)) == "all-splits-perfect: 6f[13/5] 8f[17/1]");
  CHECK(split_summary(alt_family(22)) == "all-splits-perfect: 8f[17/5] 10f[21/1]");
  CHECK(split_summary(alt_family(10)) == split_summary(alt_family(10)));
}

TEST_CASE("ladder and path witnesses") {
  for (std::size_t r = 3; r <= 6; ++r) {
    RepGraph one = witness_graph({2, "1", r});
    CHECK(one.n() == 2 * r);
    CHECK(from_graph(one).group().order() == 2 * factorial(r));
    RepGraph two = witness_graph({2, "2", r});
    CHECK(two.n() == 2 * r);
  }
  CHECK(from_graph(witness_graph({2, "2", 6})).group().order() == 46080);
  RepGraph four = witness_graph({2, "4", 2});
  CHECK(four.n() == 5);
  CHECK(four.edges().size() == 4);
  CHECK(find_splits(from_graph(four)).split_count == 0);
  for (std::size_t r = 2; r <= 6; r += 2) CHECK(witness_graph({2, "4", r}).n() == 2 * r + 1);
  CHECK_THROWS_AS(witness_graph({2, "19", 3}), InvalidArgument);
  CHECK_THROWS_AS(witness_graph({5, "1", 3}), InvalidArgument);
  CHECK_THROWS_AS(witness_graph({2, "x", 3}), InvalidArgument);
  CHECK(describe(WitnessSpec{2, "7", 5, 2}).find("7") != std::string::npos);
}

TEST_CASE("every catalogued witness is a valid independent string") {
  auto catalog = witness_catalog(14);
  CHECK(catalog.size() > 50);
  bool tables[5] = {};
  for (const auto& spec : catalog) {
    CAPTURE(describe(spec));
    RepGraph g = witness_graph(spec);
    CHECK(g.n() <= 14);
    Sggi s = from_graph(compact_labels(g));
    CHECK(validate(s).ok);
    CHECK(is_independent(s).independent);
    for (const auto& c : check_properties(s)) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      if (c.applicable) CHECK(c.holds);
    }
    tables[spec.table] = true;
  }
  CHECK(tables[2]);
  CHECK(tables[3]);
  CHECK(tables[4]);
}

TEST_CASE("compact labels") {
  RepGraph g = witness_graph({4, "A'", 6, 2});
  RepGraph c = compact_labels(g);
  CHECK(c.r() <= g.r());
  std::vector<bool> used(c.r(), false);
  for (const auto& e : c.edges()) used[e.label] = true;
  for (bool u : used) CHECK(u);
  CHECK(c.edges().size() == g.edges().size());
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(bounds(2), InvalidArgument);
  CHECK(bounds(3).kind == BoundReport::Kind::no_sggi);
  CHECK(bounds(4).kind == BoundReport::Kind::no_sggi);
  auto b5 = bounds(5);
  CHECK(b5.kind == BoundReport::Kind::rank_exactly_three);
  CHECK(theorem_bound_text(b5) == "rank exactly 3");
  for (std::size_t n : {6, 7, 8}) CHECK(theorem_bound_text(bounds(n)) == "no SGGI");
  auto b23 = bounds(23);
  CHECK(b23.kind == BoundReport::Kind::at_most);
  CHECK(b23.theorem_bound == 13);
  CHECK(theorem_bound_text(b23) == "at most 13");
  CHECK(b23.construction_rank == std::optional<std::size_t>(12));
  CHECK(b23.construction_source == "family");
  CHECK(bounds(9).construction_rank == std::optional<std::size_t>(4));
  CHECK(bounds(9).construction_source == "computer");
  CHECK(bounds(12).construction_rank == std::optional<std::size_t>(5));
  CHECK(bounds(17).construction_rank == std::optional<std::size_t>(8));
  CHECK_FALSE(bounds(8).construction_rank.has_value());
  CHECK(maroti_bound(5) == 60);
  CHECK(maroti_bound(8) == 1344);
  CHECK(bounds(8).maroti == 1344);
  CHECK(bounds(10).log2_bound == 20);  // 10!/2 = 1814400
  for (std::size_t n = 9; n <= 60; ++n) {
    auto b = bounds(n);
    if (b.construction_rank) CHECK(*b.construction_rank <= b.theorem_bound);
    CHECK(b.theorem_bound <= b.log2_bound);
  }
}

TEST_CASE("exceptional group fixtures have the stated orders") {
  CHECK(exceptional_groups().size() == 9);
  for (const auto& e : exceptional_groups()) {
    CAPTURE(e.name);
    std::ifstream in(std::string(SGGI_FIXTURES_DIR) + "/" + e.file);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    PermGroup g = parse_group(ss.str());
    CHECK(g.degree() == e.degree);
    CHECK(g.order() == e.order);
    CHECK(g.is_transitive());
    CHECK(is_primitive(g));
  }
}
