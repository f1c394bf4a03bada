#ifndef VACT_TESTS_FIXTURES_HPP
#define VACT_TESTS_FIXTURES_HPP

// Small named graphs used across the suites. Each one mirrors a file in
// tests/data/ of the same name.

#include "vact/graph.hpp"

namespace fixtures {

using vact::Graph;
using vact::new_graph;

inline Graph fig1() { return new_graph(5, {{3, 4}, {2, 3}, {2, 4}, {2, 5}, {1, 5}}); }

inline Graph table1() {
  return new_graph(5, {{1, 2}, {2, 5}, {2, 4}, {1, 5}, {1, 4}, {1, 3}, {4, 5}, {3, 4}});
}

inline Graph table2() {
  return new_graph(5, {{2, 4}, {4, 5}, {1, 4}, {2, 5}, {1, 2}, {2, 3}, {1, 5}, {1, 3}});
}

// Wheel with hub 1.
inline Graph example4_a() {
  return new_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
}

inline Graph example4_b() {
  return new_graph(5, {{1, 2}, {2, 5}, {3, 5}, {1, 5}, {1, 4}, {1, 3}, {4, 5}, {3, 4}});
}

inline Graph example4_c() {
  return new_graph(5, {{3, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}, {1, 3}, {1, 2}});
}

inline Graph fig14() {
  return new_graph(10, {{1, 2}, {1, 3}, {1, 7}, {2, 5}, {2, 8}, {3, 4}, {3, 5}, {3, 8}, {5, 9},
                        {6, 7}, {6, 9}, {7, 10}});
}

inline Graph fig15() {
  return new_graph(10, {{1, 6}, {1, 10}, {6, 7}, {6, 10}, {5, 7}, {9, 10}, {5, 9}, {2, 5}, {3, 5},
                        {4, 5}, {3, 4}, {4, 8}});
}

inline Graph fig8_tree() {
  return new_graph(14, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {4, 11}, {4, 9}, {3, 10}, {3, 8},
                        {3, 7}, {9, 12}, {8, 13}, {8, 14}});
}

inline Graph fig9_host() {
  return new_graph(14, {{1, 2},  {1, 3},  {1, 4},  {1, 5},  {1, 6},  {4, 11}, {4, 9},  {3, 10},
                        {3, 8},  {3, 7},  {9, 12}, {8, 13}, {8, 14}, {1, 9},  {1, 10}, {4, 12},
                        {3, 13}, {3, 14}, {1, 11}, {3, 4},  {8, 9},  {1, 13}});
}

// Pruned graph whose activity cover is not a partition: join edges 1-9 and
// 2-8, 3-8 reach leaves and a non-leaf of the tree.
inline Graph overlap_tree() {
  return new_graph(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {5, 8}, {5, 9}, {8, 10}});
}

inline Graph overlap_host() {
  return new_graph(10, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}, {5, 8}, {5, 9}, {8, 10},
                        {1, 9}, {2, 8}, {3, 8}});
}

} // namespace fixtures

#endif // VACT_TESTS_FIXTURES_HPP
