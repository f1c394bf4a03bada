#ifndef VACT_COMPLETE_SETS_HPP
#define VACT_COMPLETE_SETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "vact/activities.hpp"
#include "vact/graph.hpp"

namespace vact {

/// Greedy ascending pass: repeatedly take the smallest remaining label and
/// drop its closed neighbourhood. The result S has Ext(S) = V \ S and is the
/// only maximal independent set with that property.
VertexSet externally_complete(const Graph &g);

/// Greedy descending pass; the result S has Int(S) = S.
VertexSet internally_complete(const Graph &g);

/// Every maximal independent A with Int(A) = A, canonical order.
std::vector<VertexSet> enumerate_internally_complete(const Graph &g);

/// A must be maximal independent.
bool is_externally_complete(const Graph &g, const VertexSet &a,
                            ActivityMode mode = ActivityMode::standard);
bool is_internally_complete(const Graph &g, const VertexSet &a);
bool is_complete(const Graph &g, const VertexSet &a);

/// The complete set, if the graph has one.
std::optional<VertexSet> find_complete(const Graph &g);

enum class ObstructionKind { complete_set_exists, two_internally_complete };

struct Obstruction {
  ObstructionKind kind;
  std::vector<VertexSet> witnesses;
};

std::string to_string(ObstructionKind kind);

/// Structural reasons the cover cannot be a partition. Any non-empty result
/// implies partition_verdict(cover(g)).is_partition == false.
std::vector<Obstruction> partition_obstructions(const Graph &g);

/// {v} ∪ internally_complete(G[V \ N[v]]), labels mapped back to G. The result
/// A is maximal independent with A \ Int(A) = {v} or Int(A) = A.
VertexSet singleton_generator_for(const Graph &g, Vertex v);

struct IsolationCheck {
  bool has_isolated = false;
  VertexSet isolated;   // isolated vertices of G[V \ N[v]], in G's labels
  bool verified = true; // every MIS containing v has Int != ∅ (vacuous if !has_isolated)
};

IsolationCheck isolated_after_removal_check(const Graph &g, Vertex v);

} // namespace vact

#endif // VACT_COMPLETE_SETS_HPP
