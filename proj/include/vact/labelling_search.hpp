#ifndef VACT_LABELLING_SEARCH_HPP
#define VACT_LABELLING_SEARCH_HPP

#include <cstdint>

#include "vact/activities.hpp"
#include "vact/graph.hpp"

namespace vact {

enum class SearchMode { exhaustive, random };

struct SearchOptions {
  std::uint64_t budget = 1000;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
  int factorial_bound = 9;
  int exhaustive_bound = kDefaultExhaustiveBound;
};

struct SearchResult {
  Permutation best;
  PartitionVerdict verdict;
  std::uint64_t best_repeated = 0;
  std::uint64_t trials = 0;
  /// Exhaustive mode only: the optimum is certified, either because every
  /// permutation was evaluated or because a zero was reached.
  bool complete = false;
  bool found_partition = false;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t seed = 0;
};

/// Looks for the labelling with the fewest repeated subsets. Ties go to the
/// lexicographically smallest permutation among those evaluated. Exhaustive
/// mode walks permutations in lexicographic order starting at the identity.
SearchResult search_labelling(const Graph &g, const SearchOptions &options);

} // namespace vact

#endif // VACT_LABELLING_SEARCH_HPP
