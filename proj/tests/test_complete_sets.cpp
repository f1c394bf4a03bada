#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/printing.hpp"
#include "vact/complete_sets.hpp"
#include "vact/error.hpp"

using namespace vact;

TEST_CASE("ascending greedy gives the unique externally complete set") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 11, 0.1 + 0.08 * (trial % 10));
    const oracle::NaiveGraph ng(g);
    std::vector<VertexSet> found;
    for (const oracle::Set &a : oracle::all_mis(ng)) {
      oracle::Set rest;
      for (int v = 1; v <= g.order(); ++v) {
        if (!a.count(v)) rest.insert(v);
      }
      if (oracle::ext(ng, a) == rest) found.push_back(oracle::from_set(a));
    }
    REQUIRE(found.size() == 1);
    CHECK(externally_complete(g) == found.front());
    CHECK(is_externally_complete(g, found.front()));
  }
}

TEST_CASE("descending greedy is internally complete") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 11, 0.1 + 0.08 * (trial % 10));
    const VertexSet s = internally_complete(g);
    CHECK(is_maximal_independent(g, s));
    CHECK(oracle::internal(oracle::NaiveGraph(g), oracle::to_set(s)) == oracle::to_set(s));
    const std::vector<VertexSet> all = enumerate_internally_complete(g);
    CHECK(std::find(all.begin(), all.end(), s) != all.end());
  }
}

TEST_CASE("ten-vertex graphs with a complete set") {
  for (const auto &[g, expected] :
       {std::pair{fixtures::fig14(), VertexSet{1, 4, 5, 6, 8, 10}},
        std::pair{fixtures::fig15(), VertexSet{1, 2, 3, 7, 8, 9}}}) {
    CAPTURE(to_string(expected));
    CHECK(find_complete(g) == expected);
    CHECK(is_complete(g, expected));
    CHECK(interval_of(g, expected).interval == Interval{{}, g.vertices()});
    const std::vector<Obstruction> obs = partition_obstructions(g);
    REQUIRE_FALSE(obs.empty());
    CHECK(obs.front().kind == ObstructionKind::complete_set_exists);
    CHECK_FALSE(partition_verdict(cover(g)).is_partition);
  }
}

TEST_CASE("five-vertex graphs with two internally complete sets") {
  const std::vector<std::pair<Graph, std::vector<VertexSet>>> cases{
      {fixtures::example4_a(), {{2, 4}, {3, 5}}},
      {fixtures::example4_b(), {{2, 4}, {5}}},
      {fixtures::example4_c(), {{1, 5}, {2, 4}}},
  };
  for (const auto &[g, expected] : cases) {
    CHECK(enumerate_internally_complete(g) == expected);
    const std::vector<Obstruction> obs = partition_obstructions(g);
    REQUIRE_FALSE(obs.empty());
    CHECK(obs.back().kind == ObstructionKind::two_internally_complete);
    CHECK(obs.back().witnesses == expected);
    CHECK_FALSE(partition_verdict(cover(g)).is_partition);
  }
  // In the third graph {1,5} is externally complete as well.
  CHECK_FALSE(find_complete(fixtures::example4_a()));
  CHECK_FALSE(find_complete(fixtures::example4_b()));
  CHECK(find_complete(fixtures::example4_c()) == VertexSet{1, 5});
}

TEST_CASE("no obstruction on a partitioning labelling") {
  const Graph g = fixtures::table2();
  CHECK(partition_obstructions(g).empty());
  CHECK(enumerate_internally_complete(g) == std::vector<VertexSet>{{3, 5}});
}

TEST_CASE("edgeless graph is its own complete set") {
  const Graph g(4);
  CHECK(find_complete(g) == VertexSet{1, 2, 3, 4});
  CHECK(partition_verdict(cover(g)).is_partition);
}

TEST_CASE("singleton generator") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.35);
    const Cover c = cover(g);
    for (Vertex v = 1; v <= g.order(); ++v) {
      const VertexSet a = singleton_generator_for(g, v);
      CHECK(is_maximal_independent(g, a));
      CHECK(a.contains(v));
      CHECK(c.entries[c.find(a)].interval.contains({v}));
    }
  }
  CHECK_THROWS_AS(singleton_generator_for(fixtures::fig1(), 6), InvalidInput);
}

TEST_CASE("isolated vertex after removing a closed neighbourhood") {
  // Removing N[1] from the path 1-2-3-4 leaves 3-4, no isolated vertex;
  // removing N[2] leaves 4 isolated.
  const Graph path = new_graph(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(isolated_after_removal_check(path, 1).has_isolated);
  const IsolationCheck c = isolated_after_removal_check(path, 2);
  CHECK(c.has_isolated);
  CHECK(c.isolated == VertexSet{4});
  CHECK(c.verified);

  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 9, 0.3);
    for (Vertex v = 1; v <= g.order(); ++v) CHECK(isolated_after_removal_check(g, v).verified);
  }
}
