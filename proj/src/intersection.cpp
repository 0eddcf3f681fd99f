#include <numeric>
#include <optional>

#include "sggi/errors.hpp"
#include "sggi/perm_group.hpp"

namespace sggi {
namespace {

// Both chains use the full base 0,1,...,n-1, so level j stabilizes j and an
// element is determined by its base images.
class IntersectionSearch {
 public:
  IntersectionSearch(const PermGroup& a, const PermGroup& b) : a_(a), b_(b), n_(a.degree()) {}

  // Some element of a^(l) ∩ b mapping l to gamma.
  std::optional<Permutation> find(std::size_t l, Point gamma) {
    const ChainLevel& A = a_.levels()[l];
    const ChainLevel& B = b_.levels()[l];
    // The B-side residual starts as the identity since 0..l-1 are fixed.
    if (!B.in_orbit(gamma)) return std::nullopt;
    std::vector<Point> w(n_);
    const auto& binv = B.inv_rep(gamma).images();
    for (std::size_t x = 0; x < n_; ++x) w[x] = binv[x];
    std::optional<Permutation> found;
    descend(l + 1, A.rep(gamma), w, found);
    return found;
  }

 private:
  // f: the element built so far as a function on the images of deeper base
  // points; w: maps a required image back into the current B-stabilizer.
  void descend(std::size_t j, const Permutation& f, const std::vector<Point>& w,
               std::optional<Permutation>& found) {
    if (found) return;
    if (j == n_) {
      if (b_.contains(f)) found = f;
      return;
    }
    const ChainLevel& A = a_.levels()[j];
    const ChainLevel& B = b_.levels()[j];
    std::vector<Point> w2(n_);
    for (std::size_t k = 0; k < A.orbit.size() && !found; ++k) {
      Point c = f(A.orbit[k]);
      Point v = w[c];
      if (!B.in_orbit(v)) continue;
      const auto& binv = B.inv_rep(v).images();
      for (std::size_t x = 0; x < n_; ++x) w2[x] = binv[w[x]];
      descend(j + 1, A.reps[k] * f, w2, found);
    }
  }

  const PermGroup& a_;
  const PermGroup& b_;
  std::size_t n_;
};

}  // namespace

BigInt intersection_order(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("groups act on different domains");
  const std::size_t n = a.degree();
  if (n == 0) return 1;
  std::vector<Point> full(n);
  std::iota(full.begin(), full.end(), Point{0});
  PermGroup A(n, a.generators(), full);
  PermGroup B(n, b.generators(), full);
  IntersectionSearch search(A, B);

  std::vector<Permutation> found;
  BigInt order = 1;
  for (std::size_t l = n; l-- > 0;) {
    const ChainLevel& level = A.levels()[l];
    if (level.orbit.size() == 1) continue;
    Point base = static_cast<Point>(l);
    std::vector<Point> orbit{base};
    std::vector<bool> in_orbit(n, false);
    in_orbit[base] = true;
    auto close = [&] {
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (const auto& g : found) {
          Point y = g(orbit[k]);
          if (!in_orbit[y]) {
            in_orbit[y] = true;
            orbit.push_back(y);
          }
        }
      }
    };
    close();
    for (Point gamma : level.orbit) {
      if (in_orbit[gamma]) continue;
      if (auto g = search.find(l, gamma)) {
        found.push_back(std::move(*g));
        close();
      }
    }
    order *= orbit.size();
  }
  return order;
}

}  // namespace sggi
