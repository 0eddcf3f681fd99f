#include "sggi/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "sggi/errors.hpp"
#include "sggi/involutions.hpp"
#include "sggi/repgraph.hpp"

namespace sggi {
namespace {

using Clock = std::chrono::steady_clock;
using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kStabilizerCap = 1000000;

// BFS numbering of the orbit of start: old point -> local label.
std::vector<Point> bfs_relabel(const Sggi& s, Point start, std::vector<Point>& order) {
  std::vector<Point> label(s.degree(), static_cast<Point>(-1));
  order.clear();
  label[start] = 0;
  order.push_back(start);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& g : s.gens()) {
      Point w = g(order[head]);
      if (label[w] == static_cast<Point>(-1)) {
        label[w] = static_cast<Point>(order.size());
        order.push_back(w);
      }
    }
  }
  return label;
}

std::vector<Point> conjugate_images(const Sggi& s, const Permutation& g) {
  std::vector<Point> key;
  key.reserve(s.degree() * s.length());
  for (const auto& p : s.gens()) {
    Permutation c = p.conjugate_by(g);
    key.insert(key.end(), c.images().begin(), c.images().end());
  }
  return key;
}

}  // namespace

std::vector<Point> conjugacy_key(const Sggi& s, const PermGroup* normalizer) {
  if (normalizer) {
    std::vector<Point> best;
    for (const auto& g : normalizer->elements()) {
      auto key = conjugate_images(s, g);
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  }
  const std::size_t n = s.degree();
  struct Component {
    std::vector<Point> key;    // size, then local images per generator
    std::vector<Point> order;  // old points in local label order
  };
  std::vector<Component> comps;
  std::vector<Point> order;
  for (const auto& orbit : orbits(s.gens(), n)) {
    Component best;
    for (Point start : orbit) {
      auto label = bfs_relabel(s, start, order);
      std::vector<Point> key{static_cast<Point>(orbit.size())};
      for (const auto& g : s.gens()) {
        for (Point old : order) key.push_back(label[g(old)]);
      }
      if (best.key.empty() || key < best.key) best = {std::move(key), order};
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end(),
            [](const Component& a, const Component& b) { return a.key < b.key; });
  std::vector<Point> sigma(n);
  Point next = 0;
  for (const auto& c : comps) {
    for (Point old : c.order) sigma[old] = next++;
  }
  std::vector<Point> key;
  key.reserve(n * s.length());
  for (const auto& g : s.gens()) {
    std::vector<Point> images(n);
    for (Point x = 0; x < n; ++x) images[sigma[x]] = sigma[g(x)];
    key.insert(key.end(), images.begin(), images.end());
  }
  return key;
}

std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::no_sggi:
      return "no_sggi";
    case SearchOutcome::max_rank:
      return "max_rank";
    case SearchOutcome::lower_bound:
      return "lower_bound";
    case SearchOutcome::inconclusive:
      return "inconclusive";
  }
  return {};
}

std::string to_string(ExtendVerdict v) {
  switch (v) {
    case ExtendVerdict::accept:
      return "accept";
    case ExtendVerdict::identity:
      return "identity";
    case ExtendVerdict::non_involution:
      return "non_involution";
    case ExtendVerdict::commuting:
      return "commuting";
    case ExtendVerdict::membership:
      return "membership";
    case ExtendVerdict::dependent:
      return "dependent";
  }
  return {};
}

ExtendVerdict extend(const Sggi& partial, const Permutation& candidate) {
  if (candidate.degree() != partial.degree()) {
    throw DegreeMismatch("candidate degree " + std::to_string(candidate.degree()) +
                         " differs from string degree " + std::to_string(partial.degree()));
  }
  if (candidate.is_identity()) return ExtendVerdict::identity;
  if (!candidate.is_involution()) return ExtendVerdict::non_involution;
  const std::size_t d = partial.length();
  for (std::size_t j = 0; j + 1 < d; ++j) {
    if (!candidate.commutes_with(partial[j])) return ExtendVerdict::commuting;
  }
  if (d > 0 && partial.group().contains(candidate)) return ExtendVerdict::membership;
  auto gens = partial.gens();
  gens.push_back(candidate);
  if (!is_independent(Sggi(partial.degree(), std::move(gens))).independent) {
    return ExtendVerdict::dependent;
  }
  return ExtendVerdict::accept;
}

bool normalized_by_symmetric(const PermGroup& g) {
  BigInt full = factorial(g.degree());
  return g.order() == full || g.order() * 2 == full;
}

namespace {

// State shared by all root tasks of one search.
class Searcher {
 public:
  Searcher(const PermGroup& g, const SearchOptions& opts)
      : g_(g), opts_(opts), n_(g.degree()), start_(Clock::now()) {
    symmetric_ = normalized_by_symmetric(g);
    cap_ = opts.max_length ? *opts.max_length : floor_log2(g.order());
  }

  std::size_t cap() const { return cap_; }

  bool out_of_time() {
    if (timed_out_) return true;
    if (opts_.time_budget) {
      double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
      if (elapsed > *opts_.time_budget) timed_out_ = true;
    }
    return timed_out_;
  }
  bool timed_out() const { return timed_out_; }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  const PermGroup& group() const { return g_; }
  const SearchOptions& opts() const { return opts_; }
  std::size_t degree() const { return n_; }
  bool symmetric() const { return symmetric_; }

  std::atomic<bool> found{false};

 private:
  const PermGroup& g_;
  const SearchOptions& opts_;
  std::size_t n_;
  Clock::time_point start_;
  bool symmetric_ = false;
  std::size_t cap_ = 0;
  std::atomic<bool> timed_out_{false};
};

// Result of one root task.
struct TaskResult {
  std::size_t best = 0;
  std::vector<Sggi> leaves;  // of rank best
  std::map<std::size_t, std::size_t> histogram;
  SearchStats stats;
};

class Exhaustive {
 public:
  Exhaustive(Searcher& s, const std::vector<Permutation>& invols,
             const std::vector<Bits>& commute,
             const std::unordered_map<Permutation, std::size_t, PermutationHash>& index)
      : s_(s), invols_(invols), commute_(commute), index_(index) {}

  TaskResult run(std::size_t root, std::vector<Permutation> stabilizer) {
    result_ = {};
    prefix_ = {root};
    std::vector<Permutation> gens{invols_[root]};
    PermGroup h(s_.degree(), gens);
    ++result_.stats.nodes;
    if (h.order() == s_.group().order()) {
      record(gens);
    } else if (s_.cap() > 1) {
      Bits all(invols_.size());
      all.set();
      descend(gens, h, all, std::move(stabilizer));
    }
    return std::move(result_);
  }

 private:
  void prune(const char* why) { ++result_.stats.prunes[why]; }

  void record(const std::vector<Permutation>& gens) {
    const std::size_t rank = gens.size();
    ++result_.histogram[rank];
    if (s_.opts().stop_at_first) s_.found = true;
    if (rank < result_.best) return;
    if (rank > result_.best) {
      result_.best = rank;
      result_.leaves.clear();
    }
    if (result_.leaves.size() < s_.opts().max_witnesses) {
      result_.leaves.emplace_back(s_.degree(), gens);
    }
  }

  // Whether the prefix group and every remaining candidate generate G.
  bool can_generate(const std::vector<Permutation>& gens, const PermGroup& h, const Bits& cand) {
    std::vector<Permutation> acc = gens;
    PermGroup grp = h;
    for (auto c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
      if (grp.contains(invols_[c])) continue;
      acc.push_back(invols_[c]);
      grp = PermGroup(s_.degree(), acc);
      if (grp.order() == s_.group().order()) return true;
    }
    return grp.order() == s_.group().order();
  }

  bool canonical(std::size_t c, const std::vector<Permutation>& stab) {
    for (const auto& g : stab) {
      auto it = index_.find(invols_[c].conjugate_by(g));
      if (it->second < c) return false;
    }
    return true;
  }

  // gens has length d >= 1 and generates h; cand holds the involutions
  // commuting with gens[0..d-2]; stab centralizes gens.
  void descend(std::vector<Permutation>& gens, const PermGroup& h, const Bits& cand,
               std::vector<Permutation> stab) {
    const std::size_t d = gens.size();
    if (d >= 2 && !can_generate(gens, h, cand)) {
      prune("cannot_generate");
      return;
    }
    const bool use_stab = s_.opts().prune_conjugacy && stab.size() > 1;
    for (auto c = cand.find_first(); c != Bits::npos; c = cand.find_next(c)) {
      if (s_.found || ((++result_.stats.nodes & 255) == 0 && s_.out_of_time()) || s_.timed_out()) {
        return;
      }
      const Permutation& t = invols_[c];
      if (h.contains(t)) {
        prune("membership");
        continue;
      }
      if (use_stab && !canonical(c, stab)) {
        prune("conjugate");
        continue;
      }
      gens.push_back(t);
      Sggi str(s_.degree(), gens);
      if (!is_independent(str).independent) {
        prune("dependent");
        gens.pop_back();
        continue;
      }
      PermGroup hn(s_.degree(), gens);
      if (hn.order() == s_.group().order()) {
        record(gens);
      } else if (d + 1 >= s_.cap()) {
        prune("length_cap");
      } else {
        Bits next = cand & commute_[prefix_.back()];
        std::vector<Permutation> next_stab;
        if (s_.opts().prune_conjugacy) {
          for (const auto& g : stab) {
            if (t.conjugate_by(g) == t) next_stab.push_back(g);
          }
        }
        prefix_.push_back(c);
        descend(gens, hn, next, std::move(next_stab));
        prefix_.pop_back();
      }
      gens.pop_back();
    }
  }

  Searcher& s_;
  const std::vector<Permutation>& invols_;
  const std::vector<Bits>& commute_;
  const std::unordered_map<Permutation, std::size_t, PermutationHash>& index_;
  std::vector<std::size_t> prefix_;
  TaskResult result_;
};

std::vector<Permutation> group_involutions(const PermGroup& g, bool symmetric) {
  const std::size_t n = g.degree();
  if (symmetric) {
    bool alt = g.order() * 2 == factorial(n) && n > 1;
    return CommutingInvolutions(n, {}, alt).all();
  }
  std::vector<Permutation> out;
  for (const auto& x : g.elements()) {
    if (!x.is_identity() && x.is_involution()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SearchResult merge(const Searcher& s, std::vector<TaskResult>& tasks, bool exhaustive) {
  SearchResult out;
  out.length_cap = s.cap();
  std::unique_ptr<PermGroup> normalizer;
  if (!s.symmetric()) normalizer = std::make_unique<PermGroup>(s.group());
  for (auto& t : tasks) {
    out.stats.nodes += t.stats.nodes;
    for (auto& [k, v] : t.stats.prunes) out.stats.prunes[k] += v;
    for (auto& [k, v] : t.histogram) out.rank_histogram[k] += v;
    out.rank = std::max(out.rank, t.best);
  }
  std::map<std::vector<Point>, Sggi> unique;
  for (auto& t : tasks) {
    if (t.best != out.rank || out.rank == 0) continue;
    for (auto& leaf : t.leaves) {
      auto key = conjugacy_key(leaf, normalizer.get());
      unique.emplace(std::move(key), std::move(leaf));
    }
  }
  for (auto& [k, v] : unique) {
    if (out.witnesses.size() >= s.opts().max_witnesses) break;
    out.witnesses.push_back(std::move(v));
  }
  // Only a completed exhaustive run is conclusive; stopping at the first
  // string proves existence but not maximality.
  const bool complete = exhaustive && !s.timed_out();
  if (out.rank == 0) {
    out.outcome = complete ? SearchOutcome::no_sggi : SearchOutcome::inconclusive;
  } else if (complete && !s.opts().stop_at_first) {
    out.outcome = SearchOutcome::max_rank;
  } else {
    out.outcome = complete || !exhaustive ? SearchOutcome::lower_bound : SearchOutcome::inconclusive;
  }
  out.stats.seconds = s.elapsed();
  return out;
}

SearchResult exhaustive_search(const PermGroup& g, const SearchOptions& opts) {
  Searcher s(g, opts);
  const std::size_t n = g.degree();
  std::vector<Permutation> invols = group_involutions(g, s.symmetric());
  std::vector<TaskResult> tasks;

  // All involutions together must generate G.
  if (invols.empty() || PermGroup(n, invols).order() != g.order()) {
    TaskResult t;
    t.stats.prunes["involutions_generate_proper_subgroup"] = 1;
    tasks.push_back(std::move(t));
    return merge(s, tasks, true);
  }

  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  for (std::size_t k = 0; k < invols.size(); ++k) index.emplace(invols[k], k);
  std::vector<Bits> commute(invols.size(), Bits(invols.size()));
  for (std::size_t a = 0; a < invols.size(); ++a) {
    for (std::size_t b = a; b < invols.size(); ++b) {
      if (invols[a].commutes_with(invols[b])) {
        commute[a].set(b);
        commute[b].set(a);
      }
    }
  }

  // Roots: one involution per conjugacy class under the normalizer, or all.
  std::vector<std::size_t> roots;
  std::unique_ptr<std::vector<Permutation>> group_elements;
  if (!opts.prune_conjugacy) {
    for (std::size_t k = 0; k < invols.size(); ++k) roots.push_back(k);
  } else if (s.symmetric()) {
    bool alt = g.order() * 2 == factorial(n);
    for (const auto& rep : involution_class_representatives(n, alt)) {
      // The least member of the class, so that roots are canonical.
      std::size_t least = invols.size();
      for (std::size_t k = 0; k < invols.size(); ++k) {
        if (invols[k].cycles().size() == rep.cycles().size()) {
          least = k;
          break;
        }
      }
      roots.push_back(least);
    }
  } else {
    group_elements = std::make_unique<std::vector<Permutation>>(g.elements());
    std::vector<bool> seen(invols.size(), false);
    for (std::size_t k = 0; k < invols.size(); ++k) {
      if (seen[k]) continue;
      roots.push_back(k);
      for (const auto& x : *group_elements) seen[index.at(invols[k].conjugate_by(x))] = true;
    }
  }

  auto stabilizer_of = [&](std::size_t root) {
    std::vector<Permutation> stab;
    if (!opts.prune_conjugacy) return stab;
    const Permutation& t = invols[root];
    if (s.symmetric()) {
      PermGroup c(n, involution_centralizer_generators(t));
      if (c.order() <= kStabilizerCap) stab = c.elements(kStabilizerCap);
    } else {
      for (const auto& x : *group_elements) {
        if (t.conjugate_by(x) == t) stab.push_back(x);
      }
    }
    return stab;
  };

  tasks.resize(roots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Exhaustive ex(s, invols, commute, index);
    for (std::size_t k; (k = next++) < roots.size();) {
      if (s.found || s.timed_out()) break;
      tasks[k] = ex.run(roots[k], stabilizer_of(roots[k]));
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(opts.threads, roots.size()));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return merge(s, tasks, true);
}

// Random restarts; each restart deepens greedily, trying a few random
// candidates per level and preferring those that enlarge the group least.
// Strings for Alt(n) or Sym(n) whose representation graph is the path
// 1-2-...-n. Adjacent path edges carry labels differing by exactly 1, so each
// edge has one label x or two labels {x, x+2}; every such word gives a string
// with the commuting property. Stops at the first word generating g
// independently with the given rank.
void path_word_phase(const PermGroup& g, Searcher& s, std::size_t rank, TaskResult& task) {
  const std::size_t n = g.degree();
  if (n < 2 || rank == 0) return;
  std::vector<std::vector<std::size_t>> options;
  for (std::size_t x = 0; x < rank; ++x) {
    options.push_back({x});
    if (x + 2 < rank) options.push_back({x, x + 2});
  }
  auto differ_by_one = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (auto x : a)
      for (auto y : b)
        if (x + 1 != y && y + 1 != x) return false;
    return true;
  };
  std::vector<const std::vector<std::size_t>*> word;
  bool done = false;
  auto finish = [&] {
    RepGraph graph(n, rank);
    std::vector<std::size_t> per_label(rank, 0);
    for (std::size_t e = 0; e < word.size(); ++e) {
      for (auto l : *word[e]) {
        graph.add_edge(static_cast<Point>(e), static_cast<Point>(e + 1), l);
        ++per_label[l];
      }
    }
    for (auto c : per_label)
      if (c == 0) return;
    Sggi candidate = from_graph(graph);
    ++task.stats.nodes;
    if (!validate(candidate).ok || candidate.group().order() != g.order()) return;
    for (const auto& t : candidate.gens())
      if (!g.contains(t)) return;
    if (!is_independent(candidate).independent) return;
    ++task.histogram[rank];
    if (rank > task.best) {
      task.best = rank;
      task.leaves.clear();
    }
    task.leaves.push_back(candidate);
    done = true;
  };
  auto rec = [&](auto&& self) -> void {
    if (done || s.out_of_time()) return;
    if (word.size() == n - 1) {
      finish();
      return;
    }
    for (const auto& o : options) {
      if (!word.empty() && !differ_by_one(*word.back(), o)) continue;
      word.push_back(&o);
      self(self);
      word.pop_back();
      if (done) return;
    }
  };
  rec(rec);
}

SearchResult randomized_search(const PermGroup& g, const SearchOptions& opts) {
  Searcher s(g, opts);
  const std::size_t n = g.degree();
  const bool alt = s.symmetric() && g.order() * 2 == factorial(n);
  std::mt19937_64 rng(opts.seed);
  const std::size_t target = opts.target_rank ? *opts.target_rank : s.cap();

  std::vector<Permutation> invols;
  if (!s.symmetric()) invols = group_involutions(g, false);

  auto sample = [&](const std::vector<Permutation>& must_commute) -> std::optional<Permutation> {
    if (s.symmetric()) {
      static const double weights[] = {0.5, 1.0, 2.0, 4.0, 8.0};
      double w = weights[rng() % 5];
      return CommutingInvolutions(n, must_commute, alt).sample(rng, w);
    }
    std::vector<const Permutation*> ok;
    for (const auto& t : invols) {
      bool good = std::all_of(must_commute.begin(), must_commute.end(),
                              [&](const Permutation& c) { return t.commutes_with(c); });
      if (good) ok.push_back(&t);
    }
    if (ok.empty()) return std::nullopt;
    return *ok[rng() % ok.size()];
  };

  TaskResult task;
  const std::size_t tries = 24;
  const std::size_t branch = 2;
  auto dfs = [&](auto&& self, std::vector<Permutation>& gens, const PermGroup& h) -> void {
    const std::size_t d = gens.size();
    if (task.best >= target || s.out_of_time()) return;
    std::vector<Permutation> commute_with(gens.begin(), gens.begin() + (d >= 1 ? d - 1 : 0));
    std::vector<std::pair<BigInt, Permutation>> children;
    std::set<Permutation> tried;
    for (std::size_t k = 0; k < tries; ++k) {
      ++task.stats.nodes;
      auto t = sample(commute_with);
      if (!t || !tried.insert(*t).second) continue;
      if (h.contains(*t)) {
        ++task.stats.prunes["membership"];
        continue;
      }
      gens.push_back(*t);
      bool indep = is_independent(Sggi(n, gens)).independent;
      BigInt order = indep ? PermGroup(n, gens).order() : BigInt(0);
      gens.pop_back();
      if (!indep) {
        ++task.stats.prunes["dependent"];
        continue;
      }
      children.emplace_back(order, *t);
    }
    std::shuffle(children.begin(), children.end(), rng);
    std::size_t explored = 0;
    for (auto& [order, t] : children) {
      if (task.best >= target) return;
      gens.push_back(t);
      if (order == g.order()) {
        const std::size_t rank = gens.size();
        ++task.histogram[rank];
        if (rank > task.best) {
          task.best = rank;
          task.leaves.clear();
        }
        if (rank == task.best && task.leaves.size() < opts.max_witnesses) {
          task.leaves.emplace_back(n, gens);
        }
      } else if (gens.size() < s.cap() && explored < branch) {
        ++explored;
        self(self, gens, PermGroup(n, gens));
      }
      gens.pop_back();
    }
  };

  if (s.symmetric() && opts.target_rank) path_word_phase(g, s, target, task);
  while (task.best < target && !s.out_of_time()) {
    std::vector<Permutation> gens;
    dfs(dfs, gens, PermGroup::trivial(n));
    if (!opts.time_budget) break;
  }
  std::vector<TaskResult> tasks{std::move(task)};
  return merge(s, tasks, false);
}

}  // namespace

SearchResult max_rank_search(const PermGroup& g, const SearchOptions& opts) {
  if (g.is_trivial()) throw InvalidArgument("search needs a non-trivial group");
  if (opts.max_length && *opts.max_length == 0) throw InvalidArgument("max_length must be positive");
  return opts.mode == SearchMode::exhaustive ? exhaustive_search(g, opts)
                                             : randomized_search(g, opts);
}

Existence exists_sggi(const PermGroup& g, SearchOptions opts) {
  opts.mode = SearchMode::exhaustive;
  opts.stop_at_first = true;
  auto r = max_rank_search(g, opts);
  if (r.rank > 0) return Existence::yes;
  return r.outcome == SearchOutcome::inconclusive ? Existence::inconclusive : Existence::no;
}

}  // namespace sggi
