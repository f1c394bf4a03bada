#include "vact/labelling_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "vact/error.hpp"

namespace vact {

namespace {

std::uint64_t repeated_count(const Graph &g, const Permutation &p, int bound) {
  const Cover c = cover(relabel(g, p));
  std::uint64_t repeated = 0;
  for (std::uint8_t m : multiplicity_table(c, bound)) repeated += m >= 2 ? 1 : 0;
  return repeated;
}

} // namespace

SearchResult search_labelling(const Graph &g, const SearchOptions &options) {
  if (options.budget == 0) throw InvalidInput("labelling search budget must be positive");
  const int n = g.order();
  if (options.mode == SearchMode::exhaustive && n > options.factorial_bound) {
    throw InvalidInput("exhaustive labelling search needs n <= " +
                       std::to_string(options.factorial_bound) + ", got n = " + std::to_string(n));
  }
  if (n > options.exhaustive_bound) {
    throw InvalidInput("repeated-subset counting needs n <= " +
                       std::to_string(options.exhaustive_bound));
  }

  SearchResult result;
  result.mode = options.mode;
  result.seed = options.seed;
  bool have_best = false;

  auto consider = [&](const Permutation &p) {
    ++result.trials;
    const std::uint64_t r = repeated_count(g, p, options.exhaustive_bound);
    if (!have_best || r < result.best_repeated || (r == result.best_repeated && p < result.best)) {
      result.best = p;
      result.best_repeated = r;
      have_best = true;
    }
  };

  std::vector<Vertex> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);

  if (options.mode == SearchMode::exhaustive) {
    bool more = true;
    while (more && result.trials < options.budget) {
      consider(Permutation(images));
      // Lexicographic walk: the first zero found is already the tie-break winner.
      if (result.best_repeated == 0) break;
      more = std::next_permutation(images.begin(), images.end());
    }
    result.complete = !more || result.best_repeated == 0;
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t t = 0; t < options.budget; ++t) {
      std::shuffle(images.begin(), images.end(), rng);
      consider(Permutation(images));
    }
  }

  result.verdict = partition_verdict(cover(relabel(g, result.best)), options.exhaustive_bound);
  result.found_partition = result.best_repeated == 0;
  return result;
}

} // namespace vact
