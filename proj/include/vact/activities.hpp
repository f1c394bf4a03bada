#ifndef VACT_ACTIVITIES_HPP
#define VACT_ACTIVITIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "vact/graph.hpp"

namespace vact {

/// Which neighbours count as externally active. `reversed` is the variant in
/// which v is active when it is adjacent to a *larger* member of A.
enum class ActivityMode { standard, reversed };

/// Default upper bound on n for full 2^n scans.
inline constexpr int kDefaultExhaustiveBound = 25;

/// Activities of one independent set A and the interval it generates,
/// [A \ Int(A); A ∪ Ext(A)].
struct ActivityReport {
  VertexSet generator;
  VertexSet external;
  VertexSet internal;
  Interval interval;

  friend bool operator==(const ActivityReport &, const ActivityReport &) = default;
};

/// One report per maximal independent set, in canonical generator order.
struct Cover {
  int n = 0;
  std::vector<ActivityReport> entries;

  /// Index of the entry generated by `generator`, or -1.
  int find(const VertexSet &generator) const;
  friend bool operator==(const Cover &, const Cover &) = default;
};

/// Report for a generator whose interval is already known; Ext and Int are
/// read off the interval ends.
ActivityReport report_from_interval(const VertexSet &generator, const Interval &interval);

struct OverlapWitness {
  VertexSet subset;
  VertexSet first_generator;
  VertexSet second_generator;

  friend bool operator==(const OverlapWitness &, const OverlapWitness &) = default;
};

struct PartitionVerdict {
  bool is_partition = false;
  /// Pairwise test: no two intervals share a set.
  bool pairwise_disjoint = false;
  /// Size test: the interval sizes sum to exactly 2^n.
  bool size_identity = false;
  /// Exhaustive multiplicity scan; empty when n exceeds the oracle bound.
  std::optional<bool> exhaustive_partition;
  /// Number of distinct subsets lying in two or more intervals; only known
  /// when the exhaustive scan ran.
  std::optional<std::uint64_t> repeated_subset_count;
  std::optional<OverlapWitness> witness;

  bool methods_agree() const {
    return pairwise_disjoint == size_identity &&
           (!exhaustive_partition || *exhaustive_partition == pairwise_disjoint);
  }
};

/// f(G;x,y,z) = sum over maximal independent S of x^|S| y^|Ext(S)| z^|Int(S)|.
struct ActivityPolynomial {
  using Exponents = std::tuple<int, int, int>;
  std::map<Exponents, std::uint64_t> coefficients;

  std::uint64_t term_count() const;
  double evaluate(double x, double y, double z) const;
  std::string to_string() const;
  friend bool operator==(const ActivityPolynomial &, const ActivityPolynomial &) = default;
};

struct DifferenceDecomposition {
  VertexSet removed; // M = A \ B
  VertexSet added;   // N = B \ A
  bool added_meets_ext_a = false;
  bool removed_meets_ext_b = false;
};

/// Ext(A) for an independent set A. Throws InvalidInput if A is dependent.
VertexSet ext_active(const Graph &g, const VertexSet &a,
                     ActivityMode mode = ActivityMode::standard);

/// Neighbours of v that can replace v in A keeping it independent.
VertexSet subs(const Graph &g, const VertexSet &a, Vertex v);

/// Int(A): members v with Subs(v) empty or v > max Subs(v).
VertexSet int_active(const Graph &g, const VertexSet &a);

/// Requires A maximal independent.
ActivityReport interval_of(const Graph &g, const VertexSet &a,
                           ActivityMode mode = ActivityMode::standard);

Cover cover(const Graph &g, ActivityMode mode = ActivityMode::standard);

/// Greedy pass over X ascending then V \ X descending, keeping each vertex
/// that preserves independence. The result B satisfies X ∈ interval(B).
VertexSet locate_generator(const Graph &g, const VertexSet &x);

int subset_multiplicity(const Cover &c, const VertexSet &x);
int subset_multiplicity(const Graph &g, const VertexSet &x);

/// Per-subset multiplicity over all of 2^V (indexed by VertexSet::bits()),
/// saturating at 255. Requires n <= bound.
std::vector<std::uint8_t> multiplicity_table(const Cover &c, int bound = kDefaultExhaustiveBound);

/// Subsets with multiplicity at least two, ascending by bit pattern.
std::vector<VertexSet> repeated_subsets(const Cover &c, int bound = kDefaultExhaustiveBound);

PartitionVerdict partition_verdict(const Cover &c, int exhaustive_bound = kDefaultExhaustiveBound);

ActivityPolynomial activity_polynomial(const Graph &g);

/// Requires A, B maximal independent and distinct.
DifferenceDecomposition mis_difference_decomposition(const Graph &g, const VertexSet &a,
                                                     const VertexSet &b);

/// Largest independent subset of S ∪ Ext(S), when strictly larger than S.
/// Brute force; exploratory only.
std::optional<VertexSet> larger_independent_in_upper(const Graph &g, const VertexSet &s);

} // namespace vact

#endif // VACT_ACTIVITIES_HPP
