#include "vact/families.hpp"

#include <algorithm>
#include <numeric>

#include "vact/error.hpp"

namespace vact {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

void check_edge_budget(int n, int m) {
  if (n < 1 || n > kMaxVertices) throw InvalidInput("n = " + std::to_string(n) + " out of range");
  if (m < 0 || m > pair_count(n)) {
    throw InvalidInput("m = " + std::to_string(m) + " outside 0.." + std::to_string(pair_count(n)));
  }
}

Cover assemble(int n, std::vector<ActivityReport> entries) {
  std::sort(entries.begin(), entries.end(), [](const ActivityReport &a, const ActivityReport &b) {
    return canonical_less(a.generator, b.generator);
  });
  return Cover{n, std::move(entries)};
}

} // namespace

SdsDecomposition sds(int m, int n) {
  if (n < 2 || m < n - 1 || m > pair_count(n)) {
    throw InvalidInput("sds(" + std::to_string(m) + "," + std::to_string(n) +
                       ") needs n-1 <= m <= n(n-1)/2");
  }
  SdsDecomposition d{m, n, {}};
  int rest = m;
  for (int i = 1;; ++i) {
    if (rest <= n - i) {
      d.parts.push_back(rest);
      break;
    }
    d.parts.push_back(n - i);
    rest -= n - i;
  }
  return d;
}

SisDecomposition sis(int m, int n) {
  if (n < 2 || m < 1 || m > pair_count(n)) {
    throw InvalidInput("sis(" + std::to_string(m) + "," + std::to_string(n) +
                       ") needs 1 <= m <= n(n-1)/2");
  }
  SisDecomposition d{m, n, {}};
  int rest = m;
  for (int i = 1;; ++i) {
    if (rest <= i) {
      d.parts.push_back(rest);
      break;
    }
    d.parts.push_back(i);
    rest -= i;
  }
  return d;
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return new_graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph join(const Graph &g1, const Graph &g2) {
  const int shift = g1.order();
  std::vector<Edge> edges = g1.edges();
  for (const Edge &e : g2.edges()) edges.push_back({e.u + shift, e.v + shift});
  for (Vertex u = 1; u <= g1.order(); ++u) {
    for (Vertex v = 1; v <= g2.order(); ++v) edges.push_back({u, v + shift});
  }
  return new_graph(g1.order() + g2.order(), edges);
}

Graph kn_plus_em(int n, int m) { return join(complete_graph(n), empty_graph(m)); }

Graph kn_with_pendants(const std::vector<int> &sizes) {
  const int n = static_cast<int>(sizes.size());
  std::vector<Edge> edges = complete_graph(n).edges();
  Vertex next = n + 1;
  for (int i = 1; i <= n; ++i) {
    if (sizes[i - 1] < 0) throw InvalidInput("pendant block sizes must be non-negative");
    for (int j = 0; j < sizes[i - 1]; ++j) edges.push_back({i, next++});
  }
  return new_graph(next - 1, edges);
}

Graph lex_graph(int n, int m) {
  check_edge_budget(n, m);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n && static_cast<int>(edges.size()) < m; ++a) {
    for (Vertex b = a + 1; b <= n && static_cast<int>(edges.size()) < m; ++b) edges.push_back({a, b});
  }
  return new_graph(n, edges);
}

Graph colex_graph(int n, int m) {
  check_edge_budget(n, m);
  std::vector<Edge> edges;
  for (Vertex b = 2; b <= n && static_cast<int>(edges.size()) < m; ++b) {
    for (Vertex a = 1; a < b && static_cast<int>(edges.size()) < m; ++a) edges.push_back({a, b});
  }
  return new_graph(n, edges);
}

std::vector<VertexSet> lex_neighborhoods(int n, int m) {
  check_edge_budget(n, m);
  if (m < n) {
    throw InvalidInput("lex neighbourhood formula needs m >= n, got m = " + std::to_string(m));
  }
  const SdsDecomposition d = sds(m, n);
  const int k = d.depth();
  const VertexSet all = VertexSet::all(n);
  const VertexSet hubs = VertexSet::range(1, k - 1);
  const VertexSet reach = VertexSet::range(k + 1, k + d.last()); // neighbours of k above k
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  for (Vertex i = 1; i <= n; ++i) {
    if (i < k) {
      out[i - 1] = all.without(i);
    } else if (i == k) {
      out[i - 1] = labels_below(k) | reach;
    } else {
      out[i - 1] = reach.contains(i) ? hubs.with(k) : hubs;
    }
  }
  return out;
}

std::vector<VertexSet> colex_neighborhoods(int n, int m) {
  check_edge_budget(n, m);
  std::vector<VertexSet> out(static_cast<std::size_t>(n));
  if (m == 0) return out;
  const SisDecomposition d = sis(m, n);
  const int k = d.depth();
  const int q = d.last();
  for (Vertex i = 1; i <= n; ++i) {
    if (i <= q) {
      out[i - 1] = VertexSet::range(1, k + 1).without(i);
    } else if (i <= k) {
      out[i - 1] = VertexSet::range(1, k).without(i);
    } else if (i == k + 1) {
      out[i - 1] = VertexSet::range(1, q);
    }
  }
  return out;
}

bool pendant_partition_predicate(const std::vector<int> &sizes) {
  if (sizes.empty()) throw InvalidInput("pendant construction needs n >= 1");
  const bool all_nonempty = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s > 0; });
  return all_nonempty || sizes.back() == 0;
}

Cover predicted_cover_kn(int n) {
  if (n < 1) throw InvalidInput("K_n needs n >= 1");
  std::vector<ActivityReport> entries;
  for (Vertex i = 1; i < n; ++i) {
    entries.push_back(report_from_interval({i}, {{i}, VertexSet::range(i, n)}));
  }
  entries.push_back(report_from_interval({n}, {{}, {n}}));
  return assemble(n, std::move(entries));
}

Cover predicted_cover_join(int n, int m) {
  if (n == 0 || m == 0) return cover(kn_plus_em(n, m));
  const int total = n + m;
  const VertexSet second = VertexSet::range(n + 1, total);
  std::vector<ActivityReport> entries;
  for (Vertex i = 1; i <= n; ++i) {
    entries.push_back(report_from_interval({i}, {{i}, VertexSet::range(i, total)}));
  }
  entries.push_back(report_from_interval(second, {{}, second}));
  return assemble(total, std::move(entries));
}

Cover predicted_cover_pendant(const std::vector<int> &sizes) {
  if (sizes.empty()) throw InvalidInput("pendant construction needs n >= 1");
  const int n = static_cast<int>(sizes.size());
  const int total = n + std::accumulate(sizes.begin(), sizes.end(), 0);
  const VertexSet pendants = VertexSet::range(n + 1, total);

  std::vector<VertexSet> block(static_cast<std::size_t>(n));
  VertexSet bare; // clique vertices without pendants
  Vertex next = n + 1;
  for (int i = 1; i <= n; ++i) {
    block[i - 1] = VertexSet::range(next, next + sizes[i - 1] - 1);
    next += sizes[i - 1];
    if (sizes[i - 1] == 0) bare.insert(i);
  }

  std::vector<ActivityReport> entries;
  for (Vertex i = 1; i <= n; ++i) {
    const VertexSet upper = VertexSet::range(i, n) | pendants;
    if (!bare.contains(i)) {
      const VertexSet gen = (pendants - block[i - 1]).with(i);
      entries.push_back(report_from_interval(gen, {{i}, upper}));
    } else {
      // i is replaceable exactly by the other bare clique vertices.
      const VertexSet lower = i == bare.max() ? VertexSet{} : VertexSet{i};
      entries.push_back(report_from_interval(pendants.with(i), {lower, upper}));
    }
  }
  if (bare.empty()) entries.push_back(report_from_interval(pendants, {{}, pendants}));
  return assemble(total, std::move(entries));
}

Cover predicted_cover_lex(int n, int m) {
  check_edge_budget(n, m);
  const VertexSet all = VertexSet::all(n);
  std::vector<ActivityReport> entries;
  if (m == 0) {
    entries.push_back(report_from_interval(all, {{}, all}));
  } else if (m < n - 1) {
    // Star on 1..m+1 plus isolated vertices.
    entries.push_back(report_from_interval(VertexSet::range(m + 2, n).with(1), {{1}, all}));
    const VertexSet rest = VertexSet::range(2, n);
    entries.push_back(report_from_interval(rest, {{}, rest}));
  } else {
    const SdsDecomposition d = sds(m, n);
    const int k = d.depth();
    for (Vertex i = 1; i < k; ++i) {
      entries.push_back(report_from_interval({i}, {{i}, VertexSet::range(i, n)}));
    }
    const VertexSet kset = VertexSet::range(k + d.last() + 1, n).with(k);
    entries.push_back(report_from_interval(kset, {{k}, VertexSet::range(k, n)}));
    const VertexSet tail = VertexSet::range(k + 1, n);
    entries.push_back(report_from_interval(tail, {{}, tail}));
  }
  return assemble(n, std::move(entries));
}

Cover predicted_cover_colex(int n, int m) {
  check_edge_budget(n, m);
  std::vector<ActivityReport> entries;
  if (m == 0) {
    const VertexSet all = VertexSet::all(n);
    entries.push_back(report_from_interval(all, {{}, all}));
    return assemble(n, std::move(entries));
  }
  const SisDecomposition d = sis(m, n);
  const int k = d.depth();
  const int q = d.last();
  const VertexSet isolated = VertexSet::range(k + 2, n);
  if (q != k) {
    for (Vertex i = 1; i <= q; ++i) {
      entries.push_back(report_from_interval(isolated.with(i), {{i}, VertexSet::range(i, n)}));
    }
    for (Vertex i = q + 1; i <= k - 1; ++i) {
      entries.push_back(
          report_from_interval(isolated.with(i).with(k + 1), {{i}, VertexSet::range(i, n)}));
    }
    const VertexSet last = isolated.with(k).with(k + 1);
    entries.push_back(report_from_interval(last, {{}, last}));
  } else {
    for (Vertex i = 1; i <= k; ++i) {
      entries.push_back(report_from_interval(isolated.with(i), {{i}, VertexSet::range(i, n)}));
    }
    const VertexSet last = isolated.with(k + 1);
    entries.push_back(report_from_interval(last, {{}, last}));
  }
  return assemble(n, std::move(entries));
}

std::optional<Family> parse_family(const std::string &name) {
  if (name == "kn") return Family::kn;
  if (name == "join") return Family::join;
  if (name == "pendant") return Family::pendant;
  if (name == "lex") return Family::lex;
  if (name == "colex") return Family::colex;
  return std::nullopt;
}

std::string to_string(Family f) {
  switch (f) {
  case Family::kn:
    return "kn";
  case Family::join:
    return "join";
  case Family::pendant:
    return "pendant";
  case Family::lex:
    return "lex";
  case Family::colex:
    return "colex";
  }
  return "unknown";
}

Graph build_family(const FamilySpec &spec) {
  switch (spec.family) {
  case Family::kn:
    return complete_graph(spec.n);
  case Family::join:
    return kn_plus_em(spec.n, spec.m);
  case Family::pendant:
    return kn_with_pendants(spec.sizes);
  case Family::lex:
    return lex_graph(spec.n, spec.m);
  case Family::colex:
    return colex_graph(spec.n, spec.m);
  }
  throw InvalidInput("unknown family");
}

Cover predicted_cover(const FamilySpec &spec) {
  switch (spec.family) {
  case Family::kn:
    return predicted_cover_kn(spec.n);
  case Family::join:
    return predicted_cover_join(spec.n, spec.m);
  case Family::pendant:
    return predicted_cover_pendant(spec.sizes);
  case Family::lex:
    return predicted_cover_lex(spec.n, spec.m);
  case Family::colex:
    return predicted_cover_colex(spec.n, spec.m);
  }
  throw InvalidInput("unknown family");
}

} // namespace vact
