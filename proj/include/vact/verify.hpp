#ifndef VACT_VERIFY_HPP
#define VACT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "vact/families.hpp"
#include "vact/graph.hpp"
#include "vact/report.hpp"

namespace vact {

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail; // witness or reason when failed or skipped
};

struct VerifyReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult *find(const std::string &name) const;
};

inline constexpr int kDefaultOracleBound = 16;

/// Runs the brute-force invariant suite on g. Exhaustive checks are skipped
/// (not failed) when n exceeds oracle_bound. When `family` is given, g must be
/// the graph that build_family produces for it and the closed-form cover is
/// compared as well.
VerifyReport verify_all(const Graph &g, int oracle_bound = kDefaultOracleBound,
                        const std::optional<FamilySpec> &family = std::nullopt);

Json to_json(const VerifyReport &r);

} // namespace vact

#endif // VACT_VERIFY_HPP
