#include "vact/pruned.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "vact/error.hpp"

namespace vact {

namespace {

constexpr int kLeaflessEnumerationLimit = 30;

bool is_connected(const Graph &g) {
  if (g.order() == 0) return true;
  VertexSet seen{1};
  VertexSet frontier{1};
  while (!frontier.empty()) {
    const VertexSet next = open_neighborhood(g, frontier) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.vertices();
}

VertexSet higher_neighbors(const PrunedInstance &inst, Vertex v) {
  VertexSet out;
  for (Vertex u : inst.host.neighbors(v)) {
    if (inst.levels.level_of(u) > inst.levels.level_of(v)) out.insert(u);
  }
  return out;
}

} // namespace

bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

RootedLevels compute_levels(const Graph &t, Vertex root) {
  if (!is_tree(t)) throw InvalidInput("graph is not a tree");
  if (root < 1 || root > t.order()) {
    throw InvalidInput("root " + std::to_string(root) + " outside 1.." + std::to_string(t.order()));
  }
  if (t.degree(root) < 2) {
    throw InvalidInput("root " + std::to_string(root) + " has degree " +
                       std::to_string(t.degree(root)) + ", needs at least 2");
  }
  RootedLevels r;
  r.root = root;
  r.level.assign(static_cast<std::size_t>(t.order()), 0);
  r.children.assign(static_cast<std::size_t>(t.order()), VertexSet{});
  r.level[root - 1] = 1;
  std::queue<Vertex> queue;
  queue.push(root);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    const int lv = r.level[v - 1];
    if (static_cast<int>(r.level_sets.size()) < lv) r.level_sets.resize(lv);
    r.level_sets[lv - 1].insert(v);
    for (Vertex u : t.neighbors(v)) {
      if (r.level[u - 1] != 0) continue;
      r.level[u - 1] = lv + 1;
      r.children[v - 1].insert(u);
      queue.push(u);
    }
  }
  return r;
}

Vertex tree_center(const Graph &t) {
  if (!is_tree(t)) throw InvalidInput("graph is not a tree");
  VertexSet remaining = t.vertices();
  while (remaining.size() > 2) {
    VertexSet peel;
    for (Vertex v : remaining) {
      if ((t.neighbors(v) & remaining).size() <= 1) peel.insert(v);
    }
    remaining -= peel;
  }
  return remaining.min();
}

VertexSet leaves(const Graph &g) {
  VertexSet out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

bool is_pruned_tree(const Graph &t, Vertex root) {
  const RootedLevels levels = compute_levels(t, root);
  const VertexSet leafs = leaves(t);
  for (Vertex v : t.vertices() - leafs) {
    if (!levels.children[v - 1].intersects(leafs)) return false;
  }
  return true;
}

Graph max_pruned_supergraph(const Graph &t, const RootedLevels &levels, bool inter_level_only) {
  std::vector<Edge> edges = t.edges();
  const VertexSet leafs = leaves(t);
  for (Vertex v : t.vertices() - leafs) {
    const int lv = levels.level_of(v);
    for (int k = lv + 2; k <= levels.depth(); ++k) {
      for (Vertex u : levels.level_sets[k - 1]) edges.push_back({v, u});
    }
    if (inter_level_only) continue;
    for (Vertex u : levels.level_sets[lv - 1] - leafs) {
      if (u > v) edges.push_back({v, u});
    }
  }
  return new_graph(t.order(), edges);
}

bool is_pruned_graph_of(const Graph &t, Vertex root, const Graph &h) {
  if (t.order() != h.order()) {
    throw InvalidInput("tree has " + std::to_string(t.order()) + " vertices but host has " +
                       std::to_string(h.order()));
  }
  const Graph top = max_pruned_supergraph(t, compute_levels(t, root));
  for (Vertex v = 1; v <= t.order(); ++v) {
    if (!t.neighbors(v).is_subset_of(h.neighbors(v))) return false;
    if (!h.neighbors(v).is_subset_of(top.neighbors(v))) return false;
  }
  return true;
}

Permutation level_labelling(const Graph &t, Vertex root) {
  const RootedLevels levels = compute_levels(t, root);
  std::vector<Vertex> images(static_cast<std::size_t>(t.order()));
  Vertex next = 1;
  for (const VertexSet &layer : levels.level_sets) {
    for (Vertex v : layer) images[v - 1] = next++;
  }
  return Permutation(std::move(images));
}

std::optional<std::pair<Vertex, Vertex>> level_labelling_violation(const RootedLevels &levels) {
  const int n = static_cast<int>(levels.level.size());
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v < u; ++v) {
      if (levels.level_of(u) < levels.level_of(v)) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

PrunedInstance make_pruned_instance(const Graph &tree, const Graph &host, Vertex root) {
  if (!is_pruned_tree(tree, root)) {
    throw InvalidInput("tree rooted at " + std::to_string(root) +
                       " has a non-leaf vertex without a leaf child");
  }
  if (!is_pruned_graph_of(tree, root, host)) {
    throw InvalidInput("host graph is not sandwiched between the tree and its maximal pruned "
                       "supergraph");
  }
  PrunedInstance inst{tree, host, compute_levels(tree, root), leaves(tree), leaves(host)};
  return inst;
}

PrunedInstance relabel(const PrunedInstance &inst, const Permutation &perm) {
  return make_pruned_instance(relabel(inst.tree, perm), relabel(inst.host, perm),
                              perm(inst.levels.root));
}

std::string to_string(LeafMode mode) {
  return mode == LeafMode::tree_leaves ? "tree" : "host";
}

std::string to_string(ChildMode mode) {
  return mode == ChildMode::tree_children ? "tree" : "host";
}

VertexSet leaf_set(const PrunedInstance &inst, LeafMode mode) {
  return mode == LeafMode::tree_leaves ? inst.leaf_set_t : inst.leaf_set_h;
}

VertexSet children_of(const PrunedInstance &inst, const VertexSet &s, ChildMode mode) {
  VertexSet out;
  for (Vertex v : s) {
    out |= mode == ChildMode::tree_children ? inst.levels.children[v - 1]
                                            : higher_neighbors(inst, v);
  }
  return out;
}

VertexSet f_map(const PrunedInstance &inst, const VertexSet &s, LeafMode leaf_mode,
                ChildMode child_mode) {
  const VertexSet l = leaf_set(inst, leaf_mode);
  if (!s.is_subset_of(inst.host.vertices() - l)) {
    throw InvalidInput("set " + to_string(s) + " meets the leaf set " + to_string(l));
  }
  if (!is_independent(inst.host, s)) {
    throw InvalidInput("set " + to_string(s) + " is not independent");
  }
  return s | (l - children_of(inst, s, child_mode));
}

VertexSet f_inverse(const PrunedInstance &inst, const VertexSet &a, LeafMode leaf_mode) {
  if (!is_maximal_independent(inst.host, a)) {
    throw InvalidInput("set " + to_string(a) + " is not a maximal independent set");
  }
  return a - leaf_set(inst, leaf_mode);
}

std::vector<VertexSet> leafless_independent_sets(const PrunedInstance &inst, LeafMode mode) {
  const InducedSubgraph rest =
      induced_subgraph(inst.host, inst.host.vertices() - leaf_set(inst, mode));
  const int k = rest.graph.order();
  if (k > kLeaflessEnumerationLimit) {
    throw InvalidInput("too many non-leaf vertices to enumerate: " + std::to_string(k));
  }
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    const VertexSet local = VertexSet::from_bits(bits);
    if (is_independent(rest.graph, local)) out.push_back(rest.lift(local));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BijectionReport check_bijection(const PrunedInstance &inst, LeafMode leaf_mode,
                                ChildMode child_mode) {
  BijectionReport r;
  const std::vector<VertexSet> domain = leafless_independent_sets(inst, leaf_mode);
  const std::vector<VertexSet> mis = enumerate_maximal_independent_sets(inst.host);
  r.domain_size = domain.size();
  r.mis_count = mis.size();

  std::unordered_set<std::uint64_t> images;
  for (const VertexSet &s : domain) {
    const VertexSet a = f_map(inst, s, leaf_mode, child_mode);
    if (!is_maximal_independent(inst.host, a)) {
      r.lands_in_mis = false;
      if (!r.first_bad_preimage) r.first_bad_preimage = s;
    }
    if (!images.insert(a.bits()).second) {
      r.injective = false;
      if (!r.first_bad_preimage) r.first_bad_preimage = s;
    }
  }
  for (const VertexSet &a : mis) {
    if (!images.contains(a.bits())) r.surjective = false;
    const VertexSet back = f_inverse(inst, a, leaf_mode);
    if (!is_independent(inst.host, back) ||
        f_map(inst, back, leaf_mode, child_mode) != a) {
      r.round_trip = false;
    }
  }
  return r;
}

LeafActivityReport check_leaf_activity(const PrunedInstance &inst) {
  LeafActivityReport r;
  for (const VertexSet &a : enumerate_maximal_independent_sets(inst.host)) {
    if (int_active(inst.host, a) != (a & inst.leaf_set_t)) {
      r.holds = false;
      r.first_failure = a;
      break;
    }
  }
  for (Vertex leaf : inst.leaf_set_t) {
    if (!inst.host.neighbors(leaf).is_subset_of(labels_below(leaf))) {
      r.leaves_look_down = false;
      break;
    }
  }
  return r;
}

bool PrunedPartition::all_lower_match() const {
  return std::all_of(lower_matches.begin(), lower_matches.end(), [](bool b) { return b; });
}

PrunedPartition pruned_partition(const PrunedInstance &inst, LeafMode leaf_mode) {
  if (const auto bad = level_labelling_violation(inst.levels)) {
    throw InvalidInput("labels are not a level labelling: vertex " + std::to_string(bad->first) +
                       " is on a lower level than vertex " + std::to_string(bad->second) +
                       " but has a larger label");
  }
  PrunedPartition p;
  p.cover = cover(inst.host);
  p.leaf_mode = leaf_mode;
  p.leaf_modes_differ = inst.leaf_set_t != inst.leaf_set_h;
  for (const ActivityReport &e : p.cover.entries) {
    const VertexSet pre = f_inverse(inst, e.generator, leaf_mode);
    p.preimages.push_back(pre);
    p.lower_matches.push_back(pre == e.interval.lower);
  }
  return p;
}

} // namespace vact
