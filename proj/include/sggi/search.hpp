#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sggi/perm_group.hpp"
#include "sggi/sggi.hpp"

namespace sggi {

// Randomized mode runs greedy random descents from restarts until the
// target rank or the time budget is reached. For Alt(n) and Sym(n) with a
// target rank it first enumerates strings whose representation graph is a
// path on 1..n.
enum class SearchMode { exhaustive, randomized };

struct SearchOptions {
  SearchMode mode = SearchMode::exhaustive;
  // Longest string tried; defaults to floor(log2 |G|).
  std::optional<std::size_t> max_length;
  // Skip prefixes that are conjugate to an earlier one.
  bool prune_conjugacy = true;
  std::uint64_t seed = 1;
  // Wall-clock limit in seconds.
  std::optional<double> time_budget;
  std::size_t threads = 1;
  // Stop at the first string generating G (existence only).
  bool stop_at_first = false;
  // Randomized mode stops once a string of this rank is found.
  std::optional<std::size_t> target_rank;
  // Largest number of witnesses kept; the histogram counts all of them.
  std::size_t max_witnesses = 1000;
};

enum class SearchOutcome { no_sggi, max_rank, lower_bound, inconclusive };
std::string to_string(SearchOutcome o);

struct SearchStats {
  std::size_t nodes = 0;
  std::map<std::string, std::size_t> prunes;
  double seconds = 0;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::no_sggi;
  // Largest rank found; 0 when none was found.
  std::size_t rank = 0;
  std::size_t length_cap = 0;
  // Strings of the largest rank, distinct up to conjugacy, sorted by key.
  std::vector<Sggi> witnesses;
  // Number of independent generating strings found per rank, one per
  // conjugacy class when conjugacy pruning is on.
  std::map<std::size_t, std::size_t> rank_histogram;
  SearchStats stats;
};

// Conjugation by Sym(n) preserves g exactly when g is Alt(n) or Sym(n);
// otherwise the search uses conjugation by g itself.
bool normalized_by_symmetric(const PermGroup& g);

// Searches strings of involutions of g with the commuting property that are
// independent and generate g. A string with a redundant generator stays a
// valid string for g once that generator is deleted, so restricting to
// independent strings loses nothing. Throws InvalidArgument for trivial g.
SearchResult max_rank_search(const PermGroup& g, const SearchOptions& opts = {});

enum class Existence { yes, no, inconclusive };
Existence exists_sggi(const PermGroup& g, SearchOptions opts = {});

enum class ExtendVerdict { accept, identity, non_involution, commuting, membership, dependent };
std::string to_string(ExtendVerdict v);
// Whether candidate may follow the partial string: a non-identity
// involution commuting with all generators but the last, outside the group
// of the partial string, keeping the string independent. Throws
// DegreeMismatch when the degrees differ.
ExtendVerdict extend(const Sggi& partial, const Permutation& candidate);

// Key identifying a string up to conjugacy: the least relabelled image
// sequence. With normalizer = nullptr the relabelling ranges over Sym(n)
// (breadth-first numbering from each start point, per orbit); otherwise
// over the elements of normalizer.
std::vector<Point> conjugacy_key(const Sggi& s, const PermGroup* normalizer = nullptr);

}  // namespace sggi
