#ifndef VACT_PRUNED_HPP
#define VACT_PRUNED_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vact/activities.hpp"
#include "vact/graph.hpp"

namespace vact {

/// BFS levels of a rooted tree; the root sits on level 1.
struct RootedLevels {
  Vertex root = 0;
  std::vector<int> level;            // level[v-1] = d(v, root) + 1
  std::vector<VertexSet> level_sets; // level_sets[k-1] = L_k
  std::vector<VertexSet> children;   // tree children, children[v-1]

  int depth() const { return static_cast<int>(level_sets.size()); }
  int level_of(Vertex v) const { return level[v - 1]; }
};

bool is_tree(const Graph &g);

/// Rejects non-trees and roots of degree below two.
RootedLevels compute_levels(const Graph &t, Vertex root);

/// Smallest-labelled centre of a tree.
Vertex tree_center(const Graph &t);

/// Degree-one vertices.
VertexSet leaves(const Graph &g);

/// Every non-leaf vertex has at least one child that is a leaf of T.
bool is_pruned_tree(const Graph &t, Vertex root);

/// Adds, for each non-leaf v, edges to every vertex two or more levels below
/// v, and (unless inter_level_only) a clique on the non-leaf vertices of v's
/// level.
Graph max_pruned_supergraph(const Graph &t, const RootedLevels &levels,
                            bool inter_level_only = false);

/// E(T) ⊆ E(H) ⊆ E(max_pruned_supergraph(T)). Rejects order mismatches.
bool is_pruned_graph_of(const Graph &t, Vertex root, const Graph &h);

/// Relabels level by level, each level in ascending old-label order.
Permutation level_labelling(const Graph &t, Vertex root);

/// A pair (u, v) with l(u) < l(v) but u > v, if any.
std::optional<std::pair<Vertex, Vertex>> level_labelling_violation(const RootedLevels &levels);

struct PrunedInstance {
  Graph tree;
  Graph host;
  RootedLevels levels;
  VertexSet leaf_set_t;
  VertexSet leaf_set_h;
};

/// Validates the tree, the pruning condition and the sandwich.
PrunedInstance make_pruned_instance(const Graph &tree, const Graph &host, Vertex root);

/// The same instance with vertex i renamed perm(i).
PrunedInstance relabel(const PrunedInstance &inst, const Permutation &perm);

enum class LeafMode { tree_leaves, host_leaves };
/// host_higher_level: ch(v) = H-neighbours on a higher level.
enum class ChildMode { host_higher_level, tree_children };

std::string to_string(LeafMode mode);
std::string to_string(ChildMode mode);

VertexSet leaf_set(const PrunedInstance &inst, LeafMode mode);
VertexSet children_of(const PrunedInstance &inst, const VertexSet &s, ChildMode mode);

/// f(S) = S ∪ (L ∩ (V \ ch(S))). Requires S independent in H - L.
VertexSet f_map(const PrunedInstance &inst, const VertexSet &s,
                LeafMode leaf_mode = LeafMode::tree_leaves,
                ChildMode child_mode = ChildMode::host_higher_level);

/// A \ L. Requires A maximal independent in H.
VertexSet f_inverse(const PrunedInstance &inst, const VertexSet &a,
                    LeafMode leaf_mode = LeafMode::tree_leaves);

/// Independent sets of H - L, ascending by bit pattern.
std::vector<VertexSet> leafless_independent_sets(const PrunedInstance &inst, LeafMode mode);

struct BijectionReport {
  std::size_t domain_size = 0;
  std::size_t mis_count = 0;
  bool lands_in_mis = true;
  bool injective = true;
  bool surjective = true;
  bool round_trip = true; // f(f^-1(A)) = A for every A
  std::optional<VertexSet> first_bad_preimage;

  bool is_bijection() const { return lands_in_mis && injective && surjective; }
};

BijectionReport check_bijection(const PrunedInstance &inst,
                                LeafMode leaf_mode = LeafMode::tree_leaves,
                                ChildMode child_mode = ChildMode::host_higher_level);

struct LeafActivityReport {
  bool holds = true; // Int(A) = A ∩ L(T) for every A
  std::optional<VertexSet> first_failure;
  bool leaves_look_down = true; // every leaf of T has only smaller H-neighbours
};

LeafActivityReport check_leaf_activity(const PrunedInstance &inst);

struct PrunedPartition {
  Cover cover;                       // intervals from the activity definitions
  std::vector<VertexSet> preimages;  // f^-1 of each generator, entry order
  std::vector<bool> lower_matches;   // lower end equals the preimage
  bool leaf_modes_differ = false;    // L(T) != L(H)
  LeafMode leaf_mode = LeafMode::tree_leaves;

  bool all_lower_match() const;
};

/// Rejects instances whose labels are not a level labelling, naming the pair.
PrunedPartition pruned_partition(const PrunedInstance &inst,
                                 LeafMode leaf_mode = LeafMode::tree_leaves);

} // namespace vact

#endif // VACT_PRUNED_HPP
