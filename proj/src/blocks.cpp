#include <algorithm>
#include <numeric>

#include "sggi/errors.hpp"
#include "sggi/perm_group.hpp"

namespace sggi {
namespace {

// Finest invariant partition in which 0 and p share a cell.
Partition join_closure(const PermGroup& g, Point p) {
  const std::size_t n = g.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> queue{{0, p}};
  parent[p] = 0;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [a, b] = queue[q];
    for (const auto& s : g.generators()) {
      std::size_t x = find(s(a)), y = find(s(b));
      if (x == y) continue;
      parent[std::max(x, y)] = std::min(x, y);
      queue.emplace_back(s(a), s(b));
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

}  // namespace

std::optional<BlockSystem> minimal_block_system(const PermGroup& g) {
  if (!g.is_transitive()) throw InvalidArgument("block systems need a transitive group");
  const std::size_t n = g.degree();
  std::optional<BlockSystem> best;
  for (std::size_t p = 1; p < n; ++p) {
    Partition cells = join_closure(g, static_cast<Point>(p));
    if (cells.size() == 1) continue;
    if (best) {
      const auto& cur = best->blocks.front();
      const auto& cand = cells.front();
      if (cand.size() > cur.size()) continue;
      if (cand.size() == cur.size() && !(cand < cur)) continue;
    }
    best = BlockSystem{n, std::move(cells)};
  }
  return best;
}

bool is_primitive(const PermGroup& g) { return !minimal_block_system(g).has_value(); }

}  // namespace sggi
