#ifndef VACT_REPORT_HPP
#define VACT_REPORT_HPP

#include <json.hpp>

#include "vact/activities.hpp"
#include "vact/complete_sets.hpp"
#include "vact/labelling_search.hpp"
#include "vact/pruned.hpp"

namespace vact {

using Json = nlohmann::ordered_json;

/// Ascending label list.
Json to_json(const VertexSet &s);
Json to_json(const OverlapWitness &w);

/// {"n", "entries":[{"mis","int","ext","lower","upper"}], "is_partition",
///  "repeated_subsets", "witness"}. repeated_subsets is null when the
/// exhaustive scan was skipped.
Json cover_report(const Cover &c, const PartitionVerdict &v);

/// All three verdict methods, plus the list of repeated subsets when the
/// exhaustive scan ran.
Json partition_report(const Cover &c, const PartitionVerdict &v,
                      int exhaustive_bound = kDefaultExhaustiveBound);

Json complete_sets_report(const Graph &g);
Json polynomial_report(const ActivityPolynomial &p, std::size_t mis_count);
Json search_report(const SearchResult &r);
Json bijection_json(const BijectionReport &b);

} // namespace vact

#endif // VACT_REPORT_HPP
