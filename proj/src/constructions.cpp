#include "sggi/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "sggi/errors.hpp"

namespace sggi {
namespace {

class Builder {
 public:
  explicit Builder(std::size_t r) : r_(r) {}

  Point vertex() { return static_cast<Point>(n_++); }
  void edge(Point a, Point b, std::size_t label) { edges_.push_back({a, b, label}); }
  // New vertex joined to from by one edge per label.
  Point step(Point from, std::initializer_list<std::size_t> labels) {
    Point v = vertex();
    for (std::size_t l : labels) edge(from, v, l);
    return v;
  }
  // Labels 0,1,0,1,2,3,2,3,... on the first m labels, m even.
  Point pairs_pattern(Point from, std::size_t m) {
    for (std::size_t p = 0; p + 1 < m; p += 2) {
      from = step(from, {p});
      from = step(from, {p + 1});
      from = step(from, {p});
      from = step(from, {p + 1});
    }
    return from;
  }
  // Ladder hanging from top: the top continues with the given labels, a
  // bottom path with the same labels runs beneath it, and rungs labelled
  // rung join each column except the first skip_first ones.
  Point ladder(Point top, const std::vector<std::size_t>& labels, std::size_t rung,
               bool skip_first = false) {
    Point bottom = vertex();
    if (!skip_first) edge(top, bottom, rung);
    for (std::size_t l : labels) {
      top = step(top, {l});
      bottom = step(bottom, {l});
      edge(top, bottom, rung);
    }
    return top;
  }
  RepGraph build() const {
    RepGraph g(n_, r_);
    for (const auto& e : edges_) g.add_edge(e.u, e.v, e.label);
    return g;
  }

 private:
  std::size_t r_;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t x = from; x < to; ++x) out.push_back(x);
  return out;
}

void require(bool ok, const WitnessSpec& spec) {
  if (!ok) throw InvalidArgument("parameters out of range for " + describe(spec));
}

RepGraph table2(const WitnessSpec& spec) {
  const std::size_t r = spec.rank, i = spec.param;
  const std::string& row = spec.row;
  if (row == "1" || row == "2") {
    require(r >= (row == "1" ? 2 : 3), spec);
    Builder b(r);
    std::vector<Point> top, bottom;
    for (std::size_t c = 0; c < r; ++c) {
      top.push_back(b.vertex());
      bottom.push_back(b.vertex());
      if (row == "1" || c + 1 < r) b.edge(top[c], bottom[c], 0);
    }
    for (std::size_t c = 0; c + 1 < r; ++c) {
      b.edge(top[c], top[c + 1], r - 1 - c);
      b.edge(bottom[c], bottom[c + 1], r - 1 - c);
    }
    return b.build();
  }
  if (row == "3" || row == "5" || row == "6") {
    require(r >= 3, spec);
    Builder b(r);
    Point v = b.vertex();
    v = b.step(v, {1});
    if (row == "3") v = b.step(v, {2, 0});
    if (row == "5") v = b.step(v, {0});
    if (row == "6") v = b.step(v, {2});
    v = b.step(v, {1});
    b.ladder(v, range(2, r), 0);
    return b.build();
  }
  if (row == "4") {
    require(r >= 2 && r % 2 == 0, spec);
    Builder b(r);
    b.pairs_pattern(b.vertex(), r);
    return b.build();
  }
  if (row == "7") {
    require(r >= 4 && i >= 1 && i + 1 <= r, spec);
    Builder b(r);
    std::vector<Point> top{b.vertex()};
    for (std::size_t c = 0; c < r; ++c) top.push_back(b.step(top.back(), {c}));
    Point prev = 0;
    for (std::size_t c = 0; c < i; ++c) {
      Point v = b.vertex();
      b.edge(top[c], v, i);
      if (c > 0) b.edge(prev, v, c - 1);
      prev = v;
    }
    for (std::size_t c = i + 1; c <= r; ++c) {
      Point v = b.vertex();
      b.edge(top[c], v, i - 1);
      if (c > i + 1) b.edge(prev, v, c - 1);
      prev = v;
    }
    return b.build();
  }
  if (row == "8") {
    require(r >= 3 && i % 2 == 1 && i + 1 <= r, spec);
    Builder b(r);
    Point v = b.pairs_pattern(b.vertex(), i - 1);
    v = b.step(v, {i - 1});
    b.ladder(v, range(i, r), i - 1, true);
    return b.build();
  }
  if (row == "9" || row == "10") {
    require(r >= 3 && r % 2 == 1, spec);
    Builder b(r);
    Point v = b.pairs_pattern(b.vertex(), r - 3);
    v = b.step(v, {r - 3});
    Point t9 = b.step(v, {r - 2});
    Point t10 = b.step(t9, {r - 1});
    if (row == "10") b.step(t10, {r - 2});
    Point b9 = b.vertex();
    Point b10 = b.step(b9, {r - 1});
    if (row == "9") b.step(b10, {r - 2});
    b.edge(t9, b9, r - 3);
    b.edge(t10, b10, r - 3);
    return b.build();
  }
  if (row == "11") {
    require(r >= 3, spec);
    Builder b(r);
    std::vector<Point> top{b.vertex()};
    for (std::size_t c = 0; c < r; ++c) top.push_back(b.step(top.back(), {c}));
    Point prev = b.vertex();
    for (std::size_t c = 2; c <= r; ++c) {
      prev = b.step(prev, {c - 1});
      b.edge(top[c], prev, 0);
    }
    return b.build();
  }
  // Rows 12..18: seven vertices a..g, edges in the form {x, y, labels}.
  struct Fixed {
    const char* row;
    std::vector<std::array<std::size_t, 3>> edges;
  };
  static const std::vector<Fixed> fixed = {
      {"12", {{0, 1, 2}, {0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {4, 5, 1}, {5, 6, 2}, {5, 2, 0}, {6, 3, 0}}},
      {"13", {{0, 1, 2}, {0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {4, 5, 2}, {4, 2, 0}, {5, 3, 0}, {5, 6, 1}}},
      {"14", {{0, 1, 2}, {0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {5, 6, 2}, {5, 2, 0}, {6, 3, 0}}},
      {"15", {{0, 1, 1}, {1, 2, 0}, {2, 3, 1}, {4, 5, 0}, {5, 6, 1}, {4, 1, 2}, {5, 2, 2}}},
      {"16", {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}, {3, 4, 2}, {5, 6, 2}, {5, 3, 0}, {6, 4, 0}}},
      {"17", {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {4, 5, 2}, {5, 6, 1}, {4, 2, 0}, {5, 3, 0}}},
      {"18", {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {5, 6, 2}, {5, 2, 0}, {6, 3, 0}}},
  };
  for (const auto& f : fixed) {
    if (row != f.row) continue;
    RepGraph g(7, 3);
    for (const auto& e : f.edges) {
      g.add_edge(static_cast<Point>(e[0]), static_cast<Point>(e[1]), e[2]);
    }
    return g;
  }
  throw InvalidArgument("unknown row " + describe(spec));
}

RepGraph table3(const WitnessSpec& spec) {
  const std::size_t i = spec.param, k = spec.k;
  if (spec.row == "A") {
    const std::size_t h = spec.param;
    require(h >= 1, spec);
    Builder b(h + 1);
    Point v = b.vertex();
    for (std::size_t l = h; l >= 1; --l) v = b.step(v, {l});
    v = b.step(v, {0});
    for (std::size_t l = 1; l <= h; ++l) v = b.step(v, {l});
    return b.build();
  }
  const bool extra = spec.row == "B";
  if (!extra && spec.row != "C") throw InvalidArgument("unknown row " + describe(spec));
  require(extra ? (i >= 3 && k >= 2 && k < i) : i >= 1, spec);
  Builder b(i + 2);
  std::vector<Point> top{b.vertex()}, bottom{b.vertex()};
  for (std::size_t c = 0; c < i; ++c) {
    top.push_back(b.step(top.back(), {c}));
    bottom.push_back(b.step(bottom.back(), {c}));
  }
  for (std::size_t c = 0; c <= i; ++c) {
    b.edge(top[c], bottom[c], i + 1);
    if (extra && c < k) b.edge(top[c], bottom[c], k);
  }
  Point after = b.step(top[i], {i});
  b.step(after, {i + 1});
  return b.build();
}

RepGraph table4(const WitnessSpec& spec) {
  const std::size_t r = spec.rank;
  WitnessSpec base{3, spec.row.substr(0, 1), 0, 0, 0};
  if (spec.row == "A'") {
    require(spec.param + 2 <= r, spec);
    base.param = r - 1 - spec.param;
  } else if (spec.row == "B'") {
    const std::size_t j = spec.param;
    require(j >= 1 && j + 4 <= r && spec.k > j && spec.k + 3 <= r, spec);
    base.param = r - 1 - j;
    base.k = r - 1 - spec.k;
  } else if (spec.row == "C'") {
    require(spec.param >= 1 && spec.param + 2 <= r, spec);
    base.param = r - 1 - spec.param;
  } else {
    throw InvalidArgument("unknown row " + describe(spec));
  }
  RepGraph g = table3(base);
  std::vector<std::size_t> mirror;
  for (std::size_t l = 0; l < g.r(); ++l) mirror.push_back(r - 1 - l);
  return relabel(g, mirror, r);
}

}  // namespace

std::size_t alt_family_minimum(std::size_t residue) {
  static const std::array<std::size_t, 5> minimum{10, 11, 22, 18, 14};
  return minimum.at(residue);
}

bool alt_family_defined(std::size_t n) { return n >= alt_family_minimum(n % 5); }

std::size_t alt_family_rank(std::size_t n) {
  std::size_t res = n % 5;
  return (res == 2 || res == 3) ? (3 * n - 8) / 5 : 3 * (n - 1) / 5;
}

RepGraph alt_family_graph(std::size_t n) {
  if (!alt_family_defined(n)) {
    throw InvalidArgument("no Alt(" + std::to_string(n) + ") family: n must be at least " +
                          std::to_string(alt_family_minimum(n % 5)) + " when n = " +
                          std::to_string(n % 5) + " mod 5");
  }
  static const std::array<std::size_t, 5> prefix{2, 0, 8, 6, 4};
  const std::size_t m = prefix[n % 5];
  const std::size_t units = (n - (m == 0 ? 1 : 2 * m + 1)) / 5;
  Builder b(m + 3 * units);
  Point v = b.pairs_pattern(b.vertex(), m);
  for (std::size_t u = 0, x = m; u < units; ++u, x += 3) {
    v = b.step(v, {x});
    v = b.step(v, {x + 1});
    v = b.step(v, {x, x + 2});
    v = b.step(v, {x + 1});
    v = b.step(v, {x + 2});
  }
  return b.build();
}

Sggi alt_family(std::size_t n) { return from_graph(alt_family_graph(n)); }

std::string describe(const WitnessSpec& spec) {
  std::string s = "table " + std::to_string(spec.table) + " row " + spec.row;
  const bool numeric = !spec.row.empty() && spec.row.size() <= 2 &&
                       std::all_of(spec.row.begin(), spec.row.end(), ::isdigit);
  const bool ranked = spec.table == 4 || (spec.table == 2 && numeric && std::stoi(spec.row) <= 11);
  if (ranked) s += " r=" + std::to_string(spec.rank);
  const std::string& row = spec.row;
  if (row == "7" || row == "8" || row == "B" || row == "C") s += " i=" + std::to_string(spec.param);
  if (row == "A") s += " h=" + std::to_string(spec.param);
  if (row == "A'") s += " g=" + std::to_string(spec.param);
  if (row == "B'" || row == "C'") s += " j=" + std::to_string(spec.param);
  if (row == "B" || row == "B'") s += " k=" + std::to_string(spec.k);
  return s;
}

RepGraph witness_graph(const WitnessSpec& spec) {
  switch (spec.table) {
    case 2:
      return table2(spec);
    case 3:
      return table3(spec);
    case 4:
      return table4(spec);
    default:
      throw InvalidArgument("unknown table " + std::to_string(spec.table));
  }
}

std::vector<WitnessSpec> witness_catalog(std::size_t max_n) {
  std::vector<WitnessSpec> out;
  auto add = [&](WitnessSpec s) {
    if (witness_graph(s).n() <= max_n) out.push_back(s);
  };
  for (std::size_t r = 2; 2 * r <= max_n; ++r) {
    for (const char* row : {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"}) {
      std::string name = row;
      try {
        if (name == "7" || name == "8") {
          for (std::size_t i = 1; i < r; ++i) {
            try {
              add({2, name, r, i, 0});
            } catch (const InvalidArgument&) {
            }
          }
        } else {
          add({2, name, r, 0, 0});
        }
      } catch (const InvalidArgument&) {
      }
    }
  }
  for (int row = 12; row <= 18; ++row) add({2, std::to_string(row), 3, 0, 0});
  for (std::size_t p = 1; 2 * p + 2 <= max_n; ++p) {
    add({3, "A", 0, p, 0});
    add({3, "C", 0, p, 0});
    for (std::size_t k = 2; k < p; ++k) add({3, "B", 0, p, k});
  }
  // Mirrored rows, with the least used label 0 or 1.
  for (std::size_t low = 0; low <= 1; ++low) {
    for (std::size_t r = low + 2; r <= max_n; ++r) {
      const std::size_t j = low + 1;
      add({4, "A'", r, low, 0});
      if (j + 2 <= r) add({4, "C'", r, j, 0});
      for (std::size_t k = j + 1; j + 4 <= r && k + 3 <= r; ++k) add({4, "B'", r, j, k});
    }
  }
  return out;
}

RepGraph compact_labels(const RepGraph& g) {
  std::vector<std::size_t> map(g.r(), 0);
  std::size_t next = 0;
  for (std::size_t l = 0; l < g.r(); ++l) {
    map[l] = next;
    if (!g.edges_with_label(l).empty()) ++next;
  }
  return relabel(g, map, next);
}

BigInt maroti_bound(std::size_t n) {
  BigInt out = n;
  const std::size_t lg = floor_log2(BigInt(n));
  for (std::size_t i = 0; i < lg; ++i) out *= BigInt(n) - (BigInt(1) << i);
  return out;
}

BoundReport bounds(std::size_t n) {
  if (n < 3) throw InvalidArgument("bounds need n >= 3");
  BoundReport b;
  b.n = n;
  b.maroti = maroti_bound(n);
  b.log2_bound = floor_log2(factorial(n) / 2);
  if (n == 5) {
    b.kind = BoundReport::Kind::rank_exactly_three;
    b.theorem_bound = 3;
    b.construction_rank = 3;
    b.construction_source = "computer";
  } else if (n < 9) {
    b.kind = BoundReport::Kind::no_sggi;
  } else {
    b.kind = BoundReport::Kind::at_most;
    b.theorem_bound = 3 * (n - 1) / 5;
    if (alt_family_defined(n)) {
      b.construction_rank = alt_family_rank(n);
      b.construction_source = "family";
    } else if (n == 9 || n == 12 || n == 13 || n == 17) {
      b.construction_rank = alt_family_rank(n);
      b.construction_source = "computer";
    }
  }
  return b;
}

std::string theorem_bound_text(const BoundReport& b) {
  switch (b.kind) {
    case BoundReport::Kind::no_sggi:
      return "no SGGI";
    case BoundReport::Kind::rank_exactly_three:
      return "rank exactly 3";
    case BoundReport::Kind::at_most:
      return "at most " + std::to_string(b.theorem_bound);
  }
  return {};
}

const std::vector<ExceptionalGroup>& exceptional_groups() {
  static const std::vector<ExceptionalGroup> groups = {
      {"D5", "groups/d5.group", 5, 10, 2},
      {"D7", "groups/d7.group", 7, 14, 2},
      {"PSL(2,5)", "groups/psl2_5.group", 6, 60, 3},
      {"PGL(2,5)", "groups/pgl2_5.group", 6, 120, 4},
      {"PGL(2,7)", "groups/pgl2_7.group", 8, 336, 3},
      {"PSL(2,8)", "groups/psl2_8.group", 9, 504, 3},
      {"Sym(3) wr Sym(2)", "groups/s3_wr_s2.group", 9, 72, 3},
      {"Sym(5) on pairs", "groups/s5_pairs.group", 10, 120, 4},
      {"PSigmaL(2,9)", "groups/psigmal2_9.group", 10, 720, 5},
  };
  return groups;
}

}  // namespace sggi
