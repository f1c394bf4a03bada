#ifndef VACT_FAMILIES_HPP
#define VACT_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "vact/activities.hpp"
#include "vact/graph.hpp"

namespace vact {

/// m = (n-1) + (n-2) + ... + (n-k+1) + p_k with 1 <= p_k <= n-k.
struct SdsDecomposition {
  int m = 0;
  int n = 0;
  std::vector<int> parts;
  int depth() const { return static_cast<int>(parts.size()); }
  int last() const { return parts.back(); }
};

/// m = 1 + 2 + ... + (k-1) + q_k with 1 <= q_k <= k.
struct SisDecomposition {
  int m = 0;
  int n = 0;
  std::vector<int> parts;
  int depth() const { return static_cast<int>(parts.size()); }
  int last() const { return parts.back(); }
};

/// Requires n-1 <= m <= n(n-1)/2.
SdsDecomposition sds(int m, int n);
/// Requires 1 <= m <= n(n-1)/2.
SisDecomposition sis(int m, int n);

Graph complete_graph(int n);
Graph empty_graph(int n);
/// Vertices of g2 are shifted to g1.order()+1 .. g1.order()+g2.order().
Graph join(const Graph &g1, const Graph &g2);
Graph kn_plus_em(int n, int m);
/// Clique 1..n; block S_i of sizes[i-1] pendants hangs off vertex i. Blocks
/// take consecutive labels after n, S_1 first.
Graph kn_with_pendants(const std::vector<int> &sizes);

/// First m pairs of {1..n} in lex order: 12, 13, ..., 1n, 23, ...
Graph lex_graph(int n, int m);
/// First m pairs in colex order: 12, 13, 23, 14, 24, 34, 15, ...
Graph colex_graph(int n, int m);

/// Closed-form neighbourhoods; entry i-1 holds N(i). The lex form needs m >= n.
std::vector<VertexSet> lex_neighborhoods(int n, int m);
std::vector<VertexSet> colex_neighborhoods(int n, int m);

/// True iff the pendant construction's cover is a partition: every block is
/// non-empty, or vertex n has no pendants.
bool pendant_partition_predicate(const std::vector<int> &sizes);

Cover predicted_cover_kn(int n);
/// Falls back to the computed cover when n or m is zero.
Cover predicted_cover_join(int n, int m);
Cover predicted_cover_pendant(const std::vector<int> &sizes);
Cover predicted_cover_lex(int n, int m);
Cover predicted_cover_colex(int n, int m);

enum class Family { kn, join, pendant, lex, colex };

std::optional<Family> parse_family(const std::string &name);
std::string to_string(Family f);

struct FamilySpec {
  Family family = Family::kn;
  int n = 0;
  int m = 0;
  std::vector<int> sizes; // pendant blocks
};

Graph build_family(const FamilySpec &spec);
Cover predicted_cover(const FamilySpec &spec);

} // namespace vact

#endif // VACT_FAMILIES_HPP
