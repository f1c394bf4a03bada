#ifndef VACT_GRAPH_HPP
#define VACT_GRAPH_HPP

#include <compare>
#include <span>
#include <vector>

#include "vact/vertex_set.hpp"

namespace vact {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Closed set interval [lower; upper] = {X : lower ⊆ X ⊆ upper}.
struct Interval {
  VertexSet lower;
  VertexSet upper;

  bool contains(const VertexSet &x) const {
    return lower.is_subset_of(x) && x.is_subset_of(upper);
  }
  /// log2 of the number of sets in the interval.
  int dimension() const { return upper.size() - lower.size(); }
  /// Two intervals share a set iff the union of their lower ends fits in both
  /// upper ends.
  bool intersects(const Interval &other) const {
    return (lower | other.lower).is_subset_of(upper & other.upper);
  }
  friend bool operator==(const Interval &, const Interval &) = default;
};

/// Simple undirected graph on vertices 1..n, immutable once built.
class Graph {
public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::all(order()); }
  const VertexSet &neighbors(Vertex v) const { return adj_[v - 1]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u - 1].contains(v); }
  int degree(Vertex v) const { return adj_[v - 1].size(); }
  int edge_count() const;
  /// Every edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend Graph new_graph(int n, std::span<const Edge> edges);
  std::vector<VertexSet> adj_;
};

/// Builds a graph from an edge list; duplicate edges collapse. Rejects
/// labels outside 1..n, self-loops, and n outside 0..kMaxVertices.
Graph new_graph(int n, std::span<const Edge> edges);
inline Graph new_graph(int n, std::initializer_list<Edge> edges) {
  return new_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

VertexSet open_neighborhood(const Graph &g, const VertexSet &s);
VertexSet closed_neighborhood(const Graph &g, const VertexSet &s);

/// G[S] relabelled 1..|S| in increasing order of the original labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent; // new label i maps to to_parent[i-1]

  VertexSet lift(const VertexSet &local) const;
  VertexSet restrict(const VertexSet &parent) const;
};

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &s);

bool is_independent(const Graph &g, const VertexSet &s);
bool is_dominating(const Graph &g, const VertexSet &s);
bool is_maximal_independent(const Graph &g, const VertexSet &s);

/// All maximal independent sets, in canonical order (lexicographic on the
/// ascending member lists). Dispatches between the two algorithms below.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph &g);

inline constexpr int kGrowthEnumerationLimit = 20;

/// Backtracking over independent sets with a domination check at the leaves.
std::vector<VertexSet> mis_by_growth(const Graph &g);
/// Pivoting Bron-Kerbosch on the complement graph.
std::vector<VertexSet> mis_by_clique_pivot(const Graph &g);

void sort_canonical(std::vector<VertexSet> &sets);

/// Bijection on 1..n; vertex i is sent to image(i).
class Permutation {
public:
  Permutation() = default;
  /// images[i-1] is the image of i. Rejects anything that is not a bijection.
  explicit Permutation(std::vector<Vertex> images);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v - 1]; }
  VertexSet apply(const VertexSet &s) const;
  Permutation inverse() const;
  Permutation then(const Permutation &next) const;
  const std::vector<Vertex> &images() const { return images_; }

  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<Vertex> images_;
};

/// Isomorphic copy in which vertex i is renamed perm(i).
Graph relabel(const Graph &g, const Permutation &perm);

} // namespace vact

#endif // VACT_GRAPH_HPP
