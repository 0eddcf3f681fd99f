#pragma once
// Independent oracles and helpers shared by the unit tests.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sggi/perm_group.hpp"
#include "sggi/permutation.hpp"

namespace test_support {

inline sggi::Permutation perm(std::size_t n, const std::string& text) {
  return sggi::parse_cycles(text, n);
}

// Every element of <gens>, by breadth-first closure under right
// multiplication with the generators.
inline std::vector<sggi::Permutation> closure(const std::vector<sggi::Permutation>& gens,
                                              std::size_t n) {
  std::set<sggi::Permutation> seen{sggi::Permutation(n)};
  std::vector<sggi::Permutation> queue{sggi::Permutation(n)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      auto x = queue[q] * g;
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  return queue;
}

// Random permutations, each shuffling a random subset of the points chosen
// with the given inclusion probability.
inline std::vector<sggi::Permutation> random_perms(std::mt19937& rng, std::size_t n,
                                                   std::size_t count, double density) {
  std::vector<sggi::Permutation> out;
  std::bernoulli_distribution pick(density);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<sggi::Point> subset;
    for (std::size_t x = 0; x < n; ++x)
      if (pick(rng)) subset.push_back(static_cast<sggi::Point>(x));
    auto shuffled = subset;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<sggi::Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<sggi::Point>(x);
    for (std::size_t k = 0; k < subset.size(); ++k) images[subset[k]] = shuffled[k];
    out.emplace_back(images);
  }
  return out;
}

// Two random permutations preserving a random partition into equal cells
// (or arbitrary ones when n is prime).
inline std::vector<sggi::Permutation> random_block_preserving(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> sizes;
  for (std::size_t k = 2; k < n; ++k)
    if (n % k == 0) sizes.push_back(k);
  if (sizes.empty()) return random_perms(rng, n, 2, 0.8);
  std::size_t k = sizes[rng() % sizes.size()], m = n / k;
  std::vector<sggi::Point> order(n);
  for (std::size_t x = 0; x < n; ++x) order[x] = static_cast<sggi::Point>(x);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<sggi::Permutation> out;
  for (int c = 0; c < 2; ++c) {
    std::vector<std::size_t> block_perm(m);
    for (std::size_t b = 0; b < m; ++b) block_perm[b] = b;
    std::shuffle(block_perm.begin(), block_perm.end(), rng);
    std::vector<sggi::Point> images(n);
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> inner(k);
      for (std::size_t i = 0; i < k; ++i) inner[i] = i;
      std::shuffle(inner.begin(), inner.end(), rng);
      for (std::size_t i = 0; i < k; ++i)
        images[order[b * k + i]] = order[block_perm[b] * k + inner[i]];
    }
    out.emplace_back(images);
  }
  return out;
}

inline bool is_invariant_partition(const std::vector<sggi::Permutation>& gens,
                                   const std::vector<std::vector<sggi::Point>>& cells) {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  std::vector<std::size_t> cell_of(n);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (auto x : cells[i]) cell_of[x] = i;
  for (const auto& g : gens) {
    for (const auto& c : cells) {
      std::size_t target = cell_of[g(c.front())];
      for (auto x : c)
        if (cell_of[g(x)] != target) return false;
    }
  }
  return true;
}

// Exhaustive search over all partitions into equal cells of size 1 < k < n.
inline bool has_invariant_partition(const std::vector<sggi::Permutation>& gens, std::size_t n) {
  for (std::size_t k = 2; k < n; ++k) {
    if (n % k) continue;
    std::vector<std::vector<sggi::Point>> cells;
    std::vector<bool> used(n, false);
    bool found = false;
    auto rec = [&](auto&& self) -> void {
      if (found) return;
      std::size_t first = 0;
      while (first < n && used[first]) ++first;
      if (first == n) {
        found = is_invariant_partition(gens, cells);
        return;
      }
      std::vector<sggi::Point> cell{static_cast<sggi::Point>(first)};
      used[first] = true;
      auto choose = [&](auto&& pick, std::size_t from) -> void {
        if (found) return;
        if (cell.size() == k) {
          cells.push_back(cell);
          self(self);
          cells.pop_back();
          return;
        }
        for (std::size_t x = from; x < n; ++x) {
          if (used[x]) continue;
          used[x] = true;
          cell.push_back(static_cast<sggi::Point>(x));
          pick(pick, x + 1);
          cell.pop_back();
          used[x] = false;
        }
      };
      choose(choose, first + 1);
      used[first] = false;
    };
    rec(rec);
    if (found) return true;
  }
  return false;
}

// All non-identity involutions of Sym(n) by scanning every permutation;
// only for small n.
inline std::vector<sggi::Permutation> brute_involutions(std::size_t n) {
  std::vector<sggi::Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<sggi::Point>(x);
  std::vector<sggi::Permutation> out;
  do {
    sggi::Permutation p(images);
    if (!p.is_identity() && p.is_involution()) out.push_back(p);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// A random string of r involutions with the commuting property (possibly
// dependent), drawn from the given pool; empty if none was found.
inline std::vector<sggi::Permutation> random_string(std::mt19937& rng,
                                                    const std::vector<sggi::Permutation>& pool,
                                                    std::size_t r) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<sggi::Permutation> s;
    for (std::size_t d = 0; d < r; ++d) {
      std::vector<const sggi::Permutation*> ok;
      for (const auto& c : pool) {
        bool good = true;
        for (std::size_t j = 0; j + 1 < d && good; ++j) good = c.commutes_with(s[j]);
        if (good) ok.push_back(&c);
      }
      if (ok.empty()) break;
      s.push_back(*ok[rng() % ok.size()]);
    }
    if (s.size() == r) return s;
  }
  return {};
}

}  // namespace test_support
