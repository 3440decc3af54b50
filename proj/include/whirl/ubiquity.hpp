#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "whirl/whirl.hpp"

namespace whirl {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

// Largest level of an edge of P: the least M with P ⊆ G_{<=M}. Throws
// NotAnEdgeError for a non-whirl edge and PreconditionError for an edgeless P.
int minimal_containment_level(const WhirlPath& p);

// The run 3k/3^M, (3k+2)/3^M, (3k+1)/3^M, (3k+3)/3^M of the level-M
// Hamilton path, found inside P (possibly traversed backwards).
struct ZigzagWitness {
  int level = 0;
  std::int64_t block = 0;
  TriadicRational x;  // 3k/3^M
  TriadicRational y;  // (3k+3)/3^M
  WhirlPath subpath;  // always listed from x to y
  bool reversed = false;
};

// Scans the level-M edges of P in path order (M = minimal_containment_level)
// and returns the first whose block zigzag P contains as a contiguous run.
// nullopt if no such block exists.
std::optional<ZigzagWitness> zigzag_window(const WhirlPath& p);

// Two common vertices of P and Q traversed in opposite orders. `first` is
// the smaller label.
struct Refutation {
  TriadicRational first;
  TriadicRational second;
  bool first_before_second_in_p = false;
};

// Refutes order-compatibility of P (in G_{>=N}, N the least integer > 1 with
// u, v ∈ V_{N-1}, unless `n` is given) against a Q whose edges all have level
// > M = minimal_containment_level(P). The pair is read off P's zigzag
// witness. Throws PreconditionError naming the violated clause; returns
// nullopt only if no conflicting pair was found.
std::optional<Refutation> refute_compatibility(const WhirlPath& p, const WhirlPath& q,
                                               std::optional<int> n = std::nullopt);

// Least N > 1 with u, v ∈ V_{N-1}.
int minimal_separating_level(const TriadicRational& u, const TriadicRational& v);

enum class SearchStatus { kComplete, kStopped, kBudgetExceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::kComplete;
  std::uint64_t expansions = 0;
};

// Depth-first enumeration of the simple u–v paths of g with at most
// `max_edges` edges (unbounded if nullopt), in ascending neighbour order.
// `visit` returns false to stop early. Every vertex pushed onto the search
// path counts as one expansion; exceeding `budget` aborts with
// kBudgetExceeded rather than silently truncating.
SearchOutcome enumerate_paths(const WhirlGraph& g, const TriadicRational& u, const TriadicRational& v,
                              std::optional<std::size_t> max_edges, std::uint64_t budget,
                              const std::function<bool(const WhirlPath&)>& visit);

// Whether some u–v path of whirl_graph(w) is order-compatible with P, by
// exhaustive enumeration. Throws BudgetExceeded (never returns false) when
// the search is cut short.
bool exists_compatible_bruteforce(const WhirlPath& p, const LevelWindow& w, std::uint64_t budget = kDefaultBudget);

// A random simple u–v path of g: depth-first search in shuffled neighbour
// order. nullopt if v is unreachable.
std::optional<WhirlPath> random_path(const WhirlGraph& g, const TriadicRational& u, const TriadicRational& v,
                                     std::mt19937_64& rng);

// Sweep of the zigzag claim and the incompatibility assertion over every u–v
// path P of `p_window` with at most `max_edges` edges: each P must yield a
// zigzag witness, every Q of window [M+1, M+1] must be refuted, and the
// brute-force oracle must find no compatible Q there.
struct IncompatibilitySweep {
  std::size_t paths = 0;
  std::size_t witnesses = 0;
  std::size_t comparisons = 0;
  std::size_t refutations = 0;
  std::size_t oracle_negatives = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && witnesses == paths && refutations == comparisons && oracle_negatives == paths; }
};

// Throws BudgetExceeded if any single enumeration exceeds `budget`.
IncompatibilitySweep sweep_incompatibility(const TriadicRational& u, const TriadicRational& v,
                                           const LevelWindow& p_window, std::size_t max_edges,
                                           std::uint64_t budget = kDefaultBudget);

// Sweep of the cut-vertex lemma: for all u < v in V_{n-1}, every u–v path of
// `window` (window.low >= n) with at most `max_edges` edges satisfies all
// three clauses.
struct ContainmentSweep {
  std::size_t pairs = 0;
  std::size_t paths = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

ContainmentSweep sweep_lemma22(int n, const LevelWindow& window, std::size_t max_edges,
                               std::uint64_t budget = kDefaultBudget);

}  // namespace whirl
