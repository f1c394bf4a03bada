#include "vact/graph.hpp"

#include <algorithm>
#include <string>

#include "vact/error.hpp"

namespace vact {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidInput("vertex count " + std::to_string(n) + " outside 0.." +
                       std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

int Graph::edge_count() const {
  int twice = 0;
  for (const VertexSet &n : adj_) twice += n.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= order(); ++u) {
    for (Vertex v : neighbors(u) - VertexSet::range(1, u)) out.push_back({u, v});
  }
  return out;
}

Graph new_graph(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge &e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw InvalidInput("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " has a label outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    }
    g.adj_[e.u - 1].insert(e.v);
    g.adj_[e.v - 1].insert(e.u);
  }
  return g;
}

VertexSet open_neighborhood(const Graph &g, const VertexSet &s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph &g, const VertexSet &s) {
  return open_neighborhood(g, s) | s;
}

VertexSet InducedSubgraph::lift(const VertexSet &local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(to_parent[v - 1]);
  return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet &parent) const {
  VertexSet out;
  for (Vertex i = 1; i <= static_cast<int>(to_parent.size()); ++i) {
    if (parent.contains(to_parent[i - 1])) out.insert(i);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &s) {
  InducedSubgraph out;
  out.to_parent = (s & g.vertices()).to_vector();
  std::vector<Vertex> to_local(static_cast<std::size_t>(g.order()) + 1, 0);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_local[out.to_parent[i]] = static_cast<Vertex>(i) + 1;
  }
  std::vector<Edge> edges;
  for (const Edge &e : g.edges()) {
    if (to_local[e.u] != 0 && to_local[e.v] != 0) edges.push_back({to_local[e.u], to_local[e.v]});
  }
  out.graph = new_graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

bool is_independent(const Graph &g, const VertexSet &s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool is_dominating(const Graph &g, const VertexSet &s) {
  return closed_neighborhood(g, s) == g.vertices();
}

bool is_maximal_independent(const Graph &g, const VertexSet &s) {
  return s.is_subset_of(g.vertices()) && is_independent(g, s) && is_dominating(g, s);
}

void sort_canonical(std::vector<VertexSet> &sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
}

namespace {

struct Growth {
  const Graph &g;
  int n;
  std::vector<VertexSet> out;

  // `blocked` holds chosen vertices and their neighbours.
  void grow(Vertex v, VertexSet chosen, VertexSet blocked) {
    if (v > n) {
      if (blocked == g.vertices()) out.push_back(chosen);
      return;
    }
    if (!blocked.contains(v)) {
      grow(v + 1, chosen.with(v), blocked | g.neighbors(v).with(v));
      // Skipping v: some later free neighbour must still dominate it.
      const VertexSet later = VertexSet::range(v + 1, n) - blocked;
      if (g.neighbors(v).intersects(later)) grow(v + 1, chosen, blocked);
    } else {
      grow(v + 1, chosen, blocked);
    }
  }
};

struct Pivot {
  std::vector<VertexSet> comp; // complement adjacency
  std::vector<VertexSet> out;

  void expand(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) out.push_back(r);
      return;
    }
    Vertex pivot = 0;
    int best = -1;
    for (Vertex u : p | x) {
      const int score = (p & comp[u - 1]).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (Vertex v : p - comp[pivot - 1]) {
      expand(r.with(v), p & comp[v - 1], x & comp[v - 1]);
      p.erase(v);
      x.insert(v);
    }
  }
};

} // namespace

std::vector<VertexSet> mis_by_growth(const Graph &g) {
  Growth run{g, g.order(), {}};
  run.grow(1, {}, {});
  sort_canonical(run.out);
  return run.out;
}

std::vector<VertexSet> mis_by_clique_pivot(const Graph &g) {
  Pivot run;
  const VertexSet all = g.vertices();
  for (Vertex v = 1; v <= g.order(); ++v) run.comp.push_back(all - g.neighbors(v).with(v));
  run.expand({}, all, {});
  sort_canonical(run.out);
  return run.out;
}

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph &g) {
  return g.order() <= kGrowthEnumerationLimit ? mis_by_growth(g) : mis_by_clique_pivot(g);
}

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw InvalidInput("labelling is not a bijection on 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

VertexSet Permutation::apply(const VertexSet &s) const {
  VertexSet out;
  for (Vertex v : s) out.insert((*this)(v));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation &next) const {
  std::vector<Vertex> out(images_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = next((*this)(i));
  return Permutation(std::move(out));
}

Graph relabel(const Graph &g, const Permutation &perm) {
  if (perm.size() != g.order()) {
    throw InvalidInput("labelling has " + std::to_string(perm.size()) + " entries for a graph on " +
                       std::to_string(g.order()) + " vertices");
  }
  std::vector<Edge> edges;
  for (const Edge &e : g.edges()) edges.push_back({perm(e.u), perm(e.v)});
  return new_graph(g.order(), edges);
}

} // namespace vact
