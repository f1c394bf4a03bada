#include "vact/verify.hpp"

#include <algorithm>

#include "vact/complete_sets.hpp"

namespace vact {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

const CheckResult *VerifyReport::find(const std::string &name) const {
  for (const CheckResult &c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

CheckResult skipped(std::string name, int n, int bound) {
  return {std::move(name), true, true,
          "n = " + std::to_string(n) + " exceeds oracle bound " + std::to_string(bound)};
}

CheckResult pass(std::string name) { return {std::move(name), true, false, {}}; }

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, false, std::move(detail)};
}

CheckResult coverage_check(const Cover &c) {
  const std::vector<std::uint8_t> count = multiplicity_table(c, c.n);
  for (std::size_t x = 0; x < count.size(); ++x) {
    if (count[x] == 0) {
      return fail("coverage", "subset " + to_string(VertexSet::from_bits(x)) + " is uncovered");
    }
  }
  return pass("coverage");
}

CheckResult locate_check(const Graph &g, const Cover &c) {
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.order()); ++x) {
    const VertexSet xs = VertexSet::from_bits(x);
    const VertexSet b = locate_generator(g, xs);
    const int at = c.find(b);
    if (at < 0 || !c.entries[at].interval.contains(xs)) {
      return fail("locate_generator", "subset " + to_string(xs) + " not in interval of " +
                                          to_string(b));
    }
  }
  return pass("locate_generator");
}

CheckResult external_uniqueness_check(const Graph &g, const Cover &c) {
  std::vector<VertexSet> found;
  for (const ActivityReport &e : c.entries) {
    if (e.external == g.vertices() - e.generator) found.push_back(e.generator);
  }
  const VertexSet greedy = externally_complete(g);
  if (found.size() != 1 || found.front() != greedy) {
    return fail("externally_complete_unique",
                std::to_string(found.size()) + " externally complete sets; greedy gives " +
                    to_string(greedy));
  }
  return pass("externally_complete_unique");
}

CheckResult internal_greedy_check(const Graph &g) {
  const VertexSet s = internally_complete(g);
  if (!is_maximal_independent(g, s) || int_active(g, s) != s) {
    return fail("internally_complete_greedy", "descending greedy gives " + to_string(s));
  }
  return pass("internally_complete_greedy");
}

CheckResult obstruction_check(const Graph &g, const Cover &c, const PartitionVerdict &v) {
  const std::vector<Obstruction> obs = partition_obstructions(g);
  if (!obs.empty() && c.entries.size() >= 2 && v.is_partition) {
    return fail("obstruction_consistency",
                to_string(obs.front().kind) + " present but the cover is a partition");
  }
  return pass("obstruction_consistency");
}

CheckResult methods_check(const PartitionVerdict &v) {
  if (!v.methods_agree()) {
    return fail("verdict_methods_agree",
                std::string("pairwise=") + (v.pairwise_disjoint ? "true" : "false") +
                    " size_identity=" + (v.size_identity ? "true" : "false"));
  }
  return pass("verdict_methods_agree");
}

CheckResult polynomial_check(const Graph &g, const Cover &c) {
  const ActivityPolynomial p = activity_polynomial(g);
  if (p.term_count() != c.entries.size()) {
    return fail("polynomial_at_ones", "f(1,1,1) = " + std::to_string(p.term_count()) + " but " +
                                          std::to_string(c.entries.size()) + " MIS");
  }
  return pass("polynomial_at_ones");
}

std::string first_mismatch(const Cover &predicted, const Cover &computed) {
  if (predicted.entries.size() != computed.entries.size()) {
    return "predicted " + std::to_string(predicted.entries.size()) + " intervals, computed " +
           std::to_string(computed.entries.size());
  }
  for (std::size_t i = 0; i < predicted.entries.size(); ++i) {
    const ActivityReport &p = predicted.entries[i];
    const ActivityReport &q = computed.entries[i];
    if (!(p == q)) {
      return "generator " + to_string(q.generator) + ": predicted [" +
             to_string(p.interval.lower) + "; " + to_string(p.interval.upper) + "], computed [" +
             to_string(q.interval.lower) + "; " + to_string(q.interval.upper) + "]";
    }
  }
  return {};
}

} // namespace

VerifyReport verify_all(const Graph &g, int oracle_bound, const std::optional<FamilySpec> &family) {
  VerifyReport r;
  r.n = g.order();
  const Cover c = cover(g);
  const PartitionVerdict v = partition_verdict(c, oracle_bound);
  const bool small = g.order() <= oracle_bound;

  r.checks.push_back(small ? coverage_check(c) : skipped("coverage", g.order(), oracle_bound));
  r.checks.push_back(small ? locate_check(g, c)
                           : skipped("locate_generator", g.order(), oracle_bound));
  r.checks.push_back(external_uniqueness_check(g, c));
  r.checks.push_back(internal_greedy_check(g));
  r.checks.push_back(obstruction_check(g, c, v));
  r.checks.push_back(methods_check(v));
  r.checks.push_back(polynomial_check(g, c));

  if (family) {
    if (build_family(*family) != g) {
      r.checks.push_back(fail("family_prediction", "graph is not the " + to_string(family->family) +
                                                       " graph for these parameters"));
    } else {
      const std::string diff = first_mismatch(predicted_cover(*family), c);
      r.checks.push_back(diff.empty() ? pass("family_prediction")
                                      : fail("family_prediction", diff));
      if (family->family == Family::pendant) {
        const bool predicted = pendant_partition_predicate(family->sizes);
        r.checks.push_back(predicted == v.is_partition
                               ? pass("pendant_predicate")
                               : fail("pendant_predicate", std::string("predicate says ") +
                                                               (predicted ? "true" : "false")));
      }
    }
  }
  return r;
}

Json to_json(const VerifyReport &r) {
  Json checks = Json::array();
  for (const CheckResult &c : r.checks) {
    Json item = {{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return {{"n", r.n}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

} // namespace vact
