#include "vact/complete_sets.hpp"

#include "vact/error.hpp"

namespace vact {

namespace {

void check_vertex(const Graph &g, Vertex v) {
  if (v < 1 || v > g.order()) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
  }
}

} // namespace

VertexSet externally_complete(const Graph &g) {
  VertexSet s;
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    const Vertex v = remaining.min();
    s.insert(v);
    remaining -= g.neighbors(v).with(v);
  }
  return s;
}

VertexSet internally_complete(const Graph &g) {
  VertexSet s;
  VertexSet remaining = g.vertices();
  while (!remaining.empty()) {
    const Vertex v = remaining.max();
    s.insert(v);
    remaining -= g.neighbors(v).with(v);
  }
  return s;
}

bool is_externally_complete(const Graph &g, const VertexSet &a, ActivityMode mode) {
  return ext_active(g, a, mode) == g.vertices() - a;
}

bool is_internally_complete(const Graph &g, const VertexSet &a) { return int_active(g, a) == a; }

bool is_complete(const Graph &g, const VertexSet &a) {
  return is_externally_complete(g, a) && is_internally_complete(g, a);
}

std::vector<VertexSet> enumerate_internally_complete(const Graph &g) {
  std::vector<VertexSet> out;
  for (const VertexSet &a : enumerate_maximal_independent_sets(g)) {
    if (is_internally_complete(g, a)) out.push_back(a);
  }
  return out;
}

std::optional<VertexSet> find_complete(const Graph &g) {
  // A complete set is in particular externally complete, and that one is unique.
  const VertexSet candidate = externally_complete(g);
  if (is_internally_complete(g, candidate)) return candidate;
  return std::nullopt;
}

std::string to_string(ObstructionKind kind) {
  switch (kind) {
  case ObstructionKind::complete_set_exists:
    return "complete_set_exists";
  case ObstructionKind::two_internally_complete:
    return "two_internally_complete";
  }
  return "unknown";
}

std::vector<Obstruction> partition_obstructions(const Graph &g) {
  std::vector<Obstruction> out;
  if (const auto complete = find_complete(g)) {
    out.push_back({ObstructionKind::complete_set_exists, {*complete}});
  }
  const std::vector<VertexSet> internal = enumerate_internally_complete(g);
  if (internal.size() >= 2) {
    out.push_back({ObstructionKind::two_internally_complete, internal});
  }
  return out;
}

VertexSet singleton_generator_for(const Graph &g, Vertex v) {
  check_vertex(g, v);
  // Induced relabelling preserves relative order, so the descending greedy on
  // the subgraph visits vertices in the same order as it would in G.
  const InducedSubgraph rest = induced_subgraph(g, g.vertices() - g.neighbors(v).with(v));
  return rest.lift(internally_complete(rest.graph)).with(v);
}

IsolationCheck isolated_after_removal_check(const Graph &g, Vertex v) {
  check_vertex(g, v);
  const InducedSubgraph rest = induced_subgraph(g, g.vertices() - g.neighbors(v).with(v));
  IsolationCheck check;
  for (Vertex u = 1; u <= rest.graph.order(); ++u) {
    if (rest.graph.degree(u) == 0) check.isolated.insert(rest.to_parent[u - 1]);
  }
  check.has_isolated = !check.isolated.empty();
  if (check.has_isolated) {
    for (const VertexSet &a : enumerate_maximal_independent_sets(g)) {
      if (a.contains(v) && int_active(g, a).empty()) {
        check.verified = false;
        break;
      }
    }
  }
  return check;
}

} // namespace vact
