#include "vact/report.hpp"

namespace vact {

namespace {

template <class T> Json optional_json(const std::optional<T> &value) {
  return value ? Json(*value) : Json(nullptr);
}

} // namespace

Json to_json(const VertexSet &s) { return Json(s.to_vector()); }

Json to_json(const OverlapWitness &w) {
  return {{"subset", to_json(w.subset)},
          {"generators", Json::array({to_json(w.first_generator), to_json(w.second_generator)})}};
}

Json cover_report(const Cover &c, const PartitionVerdict &v) {
  Json entries = Json::array();
  for (const ActivityReport &e : c.entries) {
    entries.push_back({{"mis", to_json(e.generator)},
                       {"int", to_json(e.internal)},
                       {"ext", to_json(e.external)},
                       {"lower", to_json(e.interval.lower)},
                       {"upper", to_json(e.interval.upper)}});
  }
  return {{"n", c.n},
          {"entries", std::move(entries)},
          {"is_partition", v.is_partition},
          {"repeated_subsets", optional_json(v.repeated_subset_count)},
          {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

Json partition_report(const Cover &c, const PartitionVerdict &v, int exhaustive_bound) {
  Json out = {{"n", c.n},
              {"is_partition", v.is_partition},
              {"repeated_subsets", optional_json(v.repeated_subset_count)},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)},
              {"methods",
               {{"pairwise_disjoint", v.pairwise_disjoint},
                {"size_identity", v.size_identity},
                {"exhaustive", optional_json(v.exhaustive_partition)}}},
              {"methods_agree", v.methods_agree()}};
  if (v.exhaustive_partition) {
    Json repeated = Json::array();
    for (const VertexSet &x : repeated_subsets(c, exhaustive_bound)) repeated.push_back(to_json(x));
    out["repeated"] = std::move(repeated);
  }
  return out;
}

Json complete_sets_report(const Graph &g) {
  Json internal = Json::array();
  for (const VertexSet &s : enumerate_internally_complete(g)) internal.push_back(to_json(s));
  const auto complete = find_complete(g);
  Json obstructions = Json::array();
  for (const Obstruction &o : partition_obstructions(g)) {
    Json witnesses = Json::array();
    for (const VertexSet &w : o.witnesses) witnesses.push_back(to_json(w));
    obstructions.push_back({{"kind", to_string(o.kind)}, {"witnesses", std::move(witnesses)}});
  }
  const Cover c = cover(g);
  return {{"n", g.order()},
          {"externally_complete", to_json(externally_complete(g))},
          {"internally_complete", std::move(internal)},
          {"greedy_internally_complete", to_json(internally_complete(g))},
          {"complete", complete ? to_json(*complete) : Json(nullptr)},
          {"obstructions", std::move(obstructions)},
          {"mis_count", c.entries.size()},
          {"is_partition", partition_verdict(c).is_partition}};
}

Json polynomial_report(const ActivityPolynomial &p, std::size_t mis_count) {
  Json terms = Json::array();
  for (const auto &[exps, coef] : p.coefficients) {
    const auto [x, y, z] = exps;
    terms.push_back({{"coefficient", coef}, {"x", x}, {"y", y}, {"z", z}});
  }
  return {{"polynomial", p.to_string()},
          {"terms", std::move(terms)},
          {"value_at_ones", p.term_count()},
          {"mis_count", mis_count}};
}

Json search_report(const SearchResult &r) {
  return {{"mode", r.mode == SearchMode::exhaustive ? "exhaustive" : "random"},
          {"seed", r.seed},
          {"trials", r.trials},
          {"complete", r.complete},
          {"found_partition", r.found_partition},
          {"best_repeated_subsets", r.best_repeated},
          {"best_labelling", r.best.images()},
          {"is_partition", r.verdict.is_partition}};
}

Json bijection_json(const BijectionReport &b) {
  return {{"domain_size", b.domain_size},
          {"mis_count", b.mis_count},
          {"lands_in_mis", b.lands_in_mis},
          {"injective", b.injective},
          {"surjective", b.surjective},
          {"round_trip", b.round_trip},
          {"is_bijection", b.is_bijection()},
          {"first_bad_preimage",
           b.first_bad_preimage ? to_json(*b.first_bad_preimage) : Json(nullptr)}};
}

} // namespace vact
