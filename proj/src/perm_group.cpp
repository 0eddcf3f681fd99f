#include "sggi/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "sggi/errors.hpp"

namespace sggi {
namespace {

Point least_moved_point(const std::vector<Point>& images) {
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] != x) return static_cast<Point>(x);
  }
  return 0;
}

bool is_identity_images(const std::vector<Point>& images) {
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] != x) return false;
  }
  return true;
}

void close_orbit(ChainLevel& level, const std::vector<Permutation>& strong) {
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (std::size_t gi : level.gens) {
      const Permutation& s = strong[gi];
      Point gamma = s(level.orbit[k]);
      if (level.position[gamma] >= 0) continue;
      level.position[gamma] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(gamma);
      Permutation u = level.reps[k] * s;
      level.inv_reps.push_back(u.inverse());
      level.reps.push_back(std::move(u));
    }
  }
}

ChainLevel make_level(std::size_t degree, Point base_point) {
  ChainLevel level;
  level.base_point = base_point;
  level.position.assign(degree, -1);
  level.position[base_point] = 0;
  level.orbit.push_back(base_point);
  level.reps.push_back(Permutation(degree));
  level.inv_reps.push_back(Permutation(degree));
  return level;
}

}  // namespace

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : PermGroup(degree, std::move(generators), {}) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     const std::vector<Point>& base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw DegreeMismatch("generator degree differs from group degree");
  }
  build(base_prefix);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::transposition(degree, 0, 1));
    std::vector<Point> cyc(degree);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    if (degree > 2) gens.push_back(Permutation::from_cycles(degree, {cyc}));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup PermGroup::alternating(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 3) {
    gens.push_back(Permutation::from_cycles(degree, {{0, 1, 2}}));
    if (degree > 3) {
      std::vector<Point> cyc;
      for (std::size_t x = degree % 2 == 0 ? 1 : 0; x < degree; ++x) {
        cyc.push_back(static_cast<Point>(x));
      }
      gens.push_back(Permutation::from_cycles(degree, {cyc}));
    }
  }
  return PermGroup(degree, std::move(gens));
}

void PermGroup::build(const std::vector<Point>& base_prefix) {
  for (const auto& g : generators_) {
    if (g.is_identity()) continue;
    if (std::find(strong_.begin(), strong_.end(), g) == strong_.end()) strong_.push_back(g);
  }

  std::vector<Point> base;
  std::vector<bool> in_base(degree_, false);
  for (Point b : base_prefix) {
    if (b >= degree_ || in_base[b]) throw InvalidArgument("invalid base prefix");
    in_base[b] = true;
    base.push_back(b);
  }
  for (const auto& s : strong_) {
    bool moves = std::any_of(base.begin(), base.end(), [&](Point b) { return s(b) != b; });
    if (!moves) {
      Point b = least_moved_point(s.images());
      in_base[b] = true;
      base.push_back(b);
    }
  }

  for (std::size_t i = 0; i < base.size(); ++i) {
    levels_.push_back(make_level(degree_, base[i]));
    for (std::size_t gi = 0; gi < strong_.size(); ++gi) {
      bool fixes = true;
      for (std::size_t l = 0; l < i && fixes; ++l) fixes = strong_[gi](base[l]) == base[l];
      if (fixes) levels_[i].gens.push_back(gi);
    }
    close_orbit(levels_[i], strong_);
  }

  // checked[i][k]: how many of level i's generators have had their Schreier
  // generator at orbit point k verified.
  std::vector<std::vector<std::size_t>> checked(levels_.size());
  std::vector<Point> h(degree_), tmp(degree_);

  auto strip = [&](std::size_t from) {
    std::size_t l = from;
    for (; l < levels_.size(); ++l) {
      const ChainLevel& L = levels_[l];
      Point beta = h[L.base_point];
      if (L.position[beta] < 0) return l;
      const auto& inv = L.inv_rep(beta).images();
      for (std::size_t x = 0; x < degree_; ++x) tmp[x] = inv[h[x]];
      h.swap(tmp);
    }
    return l;
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restarted; ++k) {
      if (checked[li].size() <= k) checked[li].resize(k + 1, 0);
      while (checked[li][k] < levels_[li].gens.size()) {
        const ChainLevel& L = levels_[li];
        const Permutation& s = strong_[L.gens[checked[li][k]]];
        ++checked[li][k];
        Point gamma = s(L.orbit[k]);
        const auto& u = L.reps[k].images();
        const auto& w = L.inv_rep(gamma).images();
        for (std::size_t x = 0; x < degree_; ++x) h[x] = w[s(u[x])];
        if (is_identity_images(h)) continue;
        std::size_t j = strip(li + 1);
        if (j == levels_.size() && is_identity_images(h)) continue;

        if (j == levels_.size()) {
          levels_.push_back(make_level(degree_, least_moved_point(h)));
          checked.emplace_back();
        }
        strong_.emplace_back(h);
        std::size_t idx = strong_.size() - 1;
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(idx);
          close_orbit(levels_[l], strong_);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& L : levels_) order_ *= L.orbit.size();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base_point);
  return b;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DegreeMismatch("element degree differs from group degree");
  std::vector<Point> h = g.images(), tmp(degree_);
  for (const auto& L : levels_) {
    Point beta = h[L.base_point];
    if (L.position[beta] < 0) return false;
    const auto& inv = L.inv_rep(beta).images();
    for (std::size_t x = 0; x < degree_; ++x) tmp[x] = inv[h[x]];
    h.swap(tmp);
  }
  return is_identity_images(h);
}

bool PermGroup::contains_group(const PermGroup& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Permutation& g) { return contains(g); });
}

Partition PermGroup::orbits() const { return sggi::orbits(generators_, degree_); }

bool PermGroup::is_transitive() const { return degree_ <= 1 || orbits().size() == 1; }

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order_ > limit) throw InvalidArgument("group too large to enumerate");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  // Every element is u_{k-1} * ... * u_0 with u_l a level-l representative.
  auto rec = [&](auto&& self, std::ptrdiff_t l, const Permutation& acc) -> void {
    if (l < 0) {
      out.push_back(acc);
      return;
    }
    for (const auto& u : levels_[static_cast<std::size_t>(l)].reps) self(self, l - 1, acc * u);
  };
  rec(rec, static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation(degree_));
  return out;
}

BigInt group_order(const PermGroup& g) { return g.order(); }

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Partition orbits(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens) {
    if (g.degree() != n) throw DegreeMismatch("generator degree differs from domain size");
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t a = find(x), b = find(g(static_cast<Point>(x)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Partition cells;
  std::vector<std::int64_t> cell_of(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t root = find(x);
    if (cell_of[root] < 0) {
      cell_of[root] = static_cast<std::int64_t>(cells.size());
      cells.emplace_back();
    }
    cells[static_cast<std::size_t>(cell_of[root])].push_back(static_cast<Point>(x));
  }
  return cells;
}

std::size_t floor_log2(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("logarithm of a non-positive number");
  return static_cast<std::size_t>(boost::multiprecision::msb(x));
}

}  // namespace sggi
