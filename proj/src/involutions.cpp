#include "sggi/involutions.hpp"

#include <algorithm>

#include "sggi/errors.hpp"

namespace sggi {
namespace {

constexpr Point kOpen = static_cast<Point>(-1);

struct Assignment {
  std::vector<Point> image;
  std::vector<Point> trail;  // points assigned, in order
};

// Sets t(a) = b and t(b) = a, then closes under the commuting conditions.
// Returns false on a contradiction; the trail records what was assigned.
bool assign(Assignment& st, const std::vector<Permutation>& with, Point a, Point b) {
  std::vector<std::pair<Point, Point>> queue{{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    if (st.image[x] != kOpen || st.image[y] != kOpen) {
      if (st.image[x] != y || st.image[y] != x) return false;
      continue;
    }
    st.image[x] = y;
    st.image[y] = x;
    st.trail.push_back(x);
    if (y != x) st.trail.push_back(y);
    for (const auto& c : with) {
      queue.emplace_back(c(x), c(y));
    }
  }
  return true;
}

void undo(Assignment& st, std::size_t mark) {
  while (st.trail.size() > mark) {
    st.image[st.trail.back()] = kOpen;
    st.trail.pop_back();
  }
}

}  // namespace

CommutingInvolutions::CommutingInvolutions(std::size_t degree, std::vector<Permutation> commute_with,
                                           bool even_only)
    : degree_(degree), even_only_(even_only) {
  for (auto& c : commute_with) {
    if (c.degree() != degree) throw DegreeMismatch("commuting set has the wrong degree");
    if (c.is_identity()) continue;
    Permutation inv = c.inverse();
    if (!(inv == c)) with_.push_back(inv);
    with_.push_back(std::move(c));
  }
}

void CommutingInvolutions::for_each(const std::function<bool(const Permutation&)>& visit) const {
  Assignment st{std::vector<Point>(degree_, kOpen), {}};
  bool stop = false;
  auto rec = [&](auto&& self, Point from) -> void {
    Point x = from;
    while (x < degree_ && st.image[x] != kOpen) ++x;
    if (x == degree_) {
      Permutation t(st.image);
      if (t.is_identity() || (even_only_ && parity(t) == Parity::odd)) return;
      if (!visit(t)) stop = true;
      return;
    }
    // Images in increasing order give lexicographic order of the results.
    for (Point y = 0; y < degree_ && !stop; ++y) {
      if (y != x && (y < x || st.image[y] != kOpen)) continue;
      std::size_t mark = st.trail.size();
      if (assign(st, with_, x, y)) self(self, static_cast<Point>(x + 1));
      undo(st, mark);
    }
  };
  rec(rec, 0);
}

std::vector<Permutation> CommutingInvolutions::all() const {
  std::vector<Permutation> out;
  for_each([&](const Permutation& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::optional<Permutation> CommutingInvolutions::sample(std::mt19937_64& rng, double fix_weight,
                                                        std::size_t attempts) const {
  std::vector<Point> order(degree_);
  for (std::size_t a = 0; a < attempts; ++a) {
    Assignment st{std::vector<Point>(degree_, kOpen), {}};
    for (std::size_t k = 0; k < degree_; ++k) order[k] = static_cast<Point>(k);
    std::shuffle(order.begin(), order.end(), rng);
    bool ok = true;
    for (Point x : order) {
      if (st.image[x] != kOpen) continue;
      std::vector<Point> open;
      for (Point y = 0; y < degree_; ++y) {
        if (y != x && st.image[y] == kOpen) open.push_back(y);
      }
      std::shuffle(open.begin(), open.end(), rng);
      // Fix x with probability fix_weight / (fix_weight + 1), else pair it.
      std::bernoulli_distribution fix(fix_weight / (fix_weight + 1.0));
      if (fix(rng) || open.empty()) open.insert(open.begin(), x);
      else open.push_back(x);
      bool placed = false;
      for (Point y : open) {
        std::size_t mark = st.trail.size();
        if (assign(st, with_, x, y)) {
          placed = true;
          break;
        }
        undo(st, mark);
      }
      if (!placed) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Permutation t(st.image);
    if (t.is_identity() || (even_only_ && parity(t) == Parity::odd)) continue;
    return t;
  }
  return std::nullopt;
}

std::vector<Permutation> involution_class_representatives(std::size_t degree, bool even_only) {
  std::vector<Permutation> out;
  for (std::size_t k = 1; 2 * k <= degree; ++k) {
    if (even_only && k % 2) continue;
    std::vector<std::vector<Point>> cycles;
    for (std::size_t c = 0; c < k; ++c) {
      cycles.push_back({static_cast<Point>(2 * c), static_cast<Point>(2 * c + 1)});
    }
    out.push_back(Permutation::from_cycles(degree, cycles));
  }
  return out;
}

std::vector<Permutation> involution_centralizer_generators(const Permutation& t) {
  const std::size_t n = t.degree();
  std::vector<std::vector<Point>> pairs;
  std::vector<Point> fixed;
  for (const auto& c : t.cycles()) pairs.push_back(c);
  for (Point x = 0; x < n; ++x) {
    if (t(x) == x) fixed.push_back(x);
  }
  std::vector<Permutation> gens;
  if (!pairs.empty()) gens.push_back(Permutation::from_cycles(n, {pairs[0]}));
  if (pairs.size() >= 2) {
    gens.push_back(Permutation::from_cycles(
        n, {{pairs[0][0], pairs[1][0]}, {pairs[0][1], pairs[1][1]}}));
    if (pairs.size() >= 3) {
      std::vector<Point> firsts, seconds;
      for (const auto& p : pairs) {
        firsts.push_back(p[0]);
        seconds.push_back(p[1]);
      }
      gens.push_back(Permutation::from_cycles(n, {firsts, seconds}));
    }
  }
  if (fixed.size() >= 2) {
    gens.push_back(Permutation::from_cycles(n, {{fixed[0], fixed[1]}}));
    if (fixed.size() >= 3) gens.push_back(Permutation::from_cycles(n, {fixed}));
  }
  return gens;
}

}  // namespace sggi
