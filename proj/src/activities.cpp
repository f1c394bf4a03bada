#include "vact/activities.hpp"

#include <cmath>
#include <sstream>

#include "vact/error.hpp"

namespace vact {

namespace {

void require_independent(const Graph &g, const VertexSet &a) {
  if (!a.is_subset_of(g.vertices())) {
    throw InvalidInput("set " + to_string(a) + " has labels outside the graph");
  }
  if (!is_independent(g, a)) throw InvalidInput("set " + to_string(a) + " is not independent");
}

void require_maximal(const Graph &g, const VertexSet &a) {
  if (!is_maximal_independent(g, a)) {
    throw InvalidInput("set " + to_string(a) + " is not a maximal independent set");
  }
}

} // namespace

int Cover::find(const VertexSet &generator) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].generator == generator) return static_cast<int>(i);
  }
  return -1;
}

ActivityReport report_from_interval(const VertexSet &generator, const Interval &interval) {
  return {generator, interval.upper - generator, generator - interval.lower, interval};
}

VertexSet ext_active(const Graph &g, const VertexSet &a, ActivityMode mode) {
  require_independent(g, a);
  VertexSet out;
  for (Vertex v : g.vertices() - a) {
    const VertexSet side =
        mode == ActivityMode::standard ? labels_below(v) : labels_above(v, g.order());
    if (g.neighbors(v).intersects(a & side)) out.insert(v);
  }
  return out;
}

VertexSet subs(const Graph &g, const VertexSet &a, Vertex v) {
  require_independent(g, a);
  if (!a.contains(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " is not in " + to_string(a));
  }
  const VertexSet rest = a.without(v);
  VertexSet out;
  for (Vertex u : g.neighbors(v)) {
    if (!g.neighbors(u).intersects(rest)) out.insert(u);
  }
  return out;
}

VertexSet int_active(const Graph &g, const VertexSet &a) {
  require_independent(g, a);
  VertexSet out;
  for (Vertex v : a) {
    const VertexSet s = subs(g, a, v);
    if (s.empty() || v > s.max()) out.insert(v);
  }
  return out;
}

ActivityReport interval_of(const Graph &g, const VertexSet &a, ActivityMode mode) {
  require_maximal(g, a);
  ActivityReport r;
  r.generator = a;
  r.external = ext_active(g, a, mode);
  r.internal = int_active(g, a);
  r.interval = {a - r.internal, a | r.external};
  return r;
}

Cover cover(const Graph &g, ActivityMode mode) {
  Cover c;
  c.n = g.order();
  for (const VertexSet &a : enumerate_maximal_independent_sets(g)) {
    c.entries.push_back(interval_of(g, a, mode));
  }
  return c;
}

VertexSet locate_generator(const Graph &g, const VertexSet &x) {
  const VertexSet inside = x & g.vertices();
  std::vector<Vertex> order = inside.to_vector();
  const std::vector<Vertex> outside = (g.vertices() - inside).to_vector();
  order.insert(order.end(), outside.rbegin(), outside.rend());

  VertexSet b;
  for (Vertex v : order) {
    if (!g.neighbors(v).intersects(b)) b.insert(v);
  }
  return b;
}

int subset_multiplicity(const Cover &c, const VertexSet &x) {
  int count = 0;
  for (const ActivityReport &e : c.entries) count += e.interval.contains(x) ? 1 : 0;
  return count;
}

int subset_multiplicity(const Graph &g, const VertexSet &x) {
  return subset_multiplicity(cover(g), x);
}

std::vector<std::uint8_t> multiplicity_table(const Cover &c, int bound) {
  if (c.n > bound) {
    throw InvalidInput("exhaustive scan needs n <= " + std::to_string(bound) + ", got n = " +
                       std::to_string(c.n));
  }
  std::vector<std::uint8_t> count(std::size_t{1} << c.n, 0);
  for (const ActivityReport &e : c.entries) {
    const std::uint64_t low = e.interval.lower.bits();
    const std::uint64_t free = (e.interval.upper - e.interval.lower).bits();
    // Walk every submask of `free`, including 0.
    std::uint64_t sub = free;
    while (true) {
      std::uint8_t &slot = count[low | sub];
      if (slot < 255) ++slot;
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  }
  return count;
}

std::vector<VertexSet> repeated_subsets(const Cover &c, int bound) {
  const std::vector<std::uint8_t> count = multiplicity_table(c, bound);
  std::vector<VertexSet> out;
  for (std::size_t x = 0; x < count.size(); ++x) {
    if (count[x] >= 2) out.push_back(VertexSet::from_bits(x));
  }
  return out;
}

namespace {

// Interval sizes reach 2^64 when n = 64.
__extension__ using Wide = unsigned __int128;

OverlapWitness witness_for(const Cover &c, const VertexSet &x) {
  OverlapWitness w{x, {}, {}};
  int seen = 0;
  for (const ActivityReport &e : c.entries) {
    if (!e.interval.contains(x)) continue;
    (seen == 0 ? w.first_generator : w.second_generator) = e.generator;
    if (++seen == 2) break;
  }
  return w;
}

} // namespace

PartitionVerdict partition_verdict(const Cover &c, int exhaustive_bound) {
  PartitionVerdict v;

  std::optional<OverlapWitness> pair_witness;
  for (std::size_t i = 0; i < c.entries.size() && !pair_witness; ++i) {
    for (std::size_t j = i + 1; j < c.entries.size(); ++j) {
      const Interval &a = c.entries[i].interval;
      const Interval &b = c.entries[j].interval;
      if (a.intersects(b)) {
        pair_witness = OverlapWitness{a.lower | b.lower, c.entries[i].generator,
                                      c.entries[j].generator};
        break;
      }
    }
  }
  v.pairwise_disjoint = !pair_witness;

  const Wide target = Wide{1} << c.n;
  Wide total = 0;
  for (const ActivityReport &e : c.entries) {
    total += Wide{1} << e.interval.dimension();
    if (total > target) break;
  }
  v.size_identity = total == target;

  if (c.n <= exhaustive_bound) {
    const std::vector<std::uint8_t> count = multiplicity_table(c, exhaustive_bound);
    std::uint64_t repeated = 0;
    bool exact = true;
    std::optional<std::uint64_t> first_repeat;
    for (std::size_t x = 0; x < count.size(); ++x) {
      if (count[x] != 1) exact = false;
      if (count[x] >= 2) {
        ++repeated;
        if (!first_repeat) first_repeat = x;
      }
    }
    v.exhaustive_partition = exact;
    v.repeated_subset_count = repeated;
    if (first_repeat) v.witness = witness_for(c, VertexSet::from_bits(*first_repeat));
  } else {
    v.witness = pair_witness;
  }

  v.is_partition = v.pairwise_disjoint;
  return v;
}

std::uint64_t ActivityPolynomial::term_count() const {
  std::uint64_t total = 0;
  for (const auto &[exps, coef] : coefficients) total += coef;
  return total;
}

double ActivityPolynomial::evaluate(double x, double y, double z) const {
  double total = 0.0;
  for (const auto &[exps, coef] : coefficients) {
    const auto [i, j, k] = exps;
    total += static_cast<double>(coef) * std::pow(x, i) * std::pow(y, j) * std::pow(z, k);
  }
  return total;
}

std::string ActivityPolynomial::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream out;
  bool first_term = true;
  for (const auto &[exps, coef] : coefficients) {
    if (!first_term) out << " + ";
    first_term = false;
    std::ostringstream term;
    auto power = [&term](char var, int e) {
      if (e == 0) return;
      if (term.tellp() > 0) term << ' ';
      term << var;
      if (e > 1) term << '^' << e;
    };
    if (coef != 1) term << coef;
    power('x', std::get<0>(exps));
    power('y', std::get<1>(exps));
    power('z', std::get<2>(exps));
    out << (term.tellp() > 0 ? term.str() : "1");
  }
  return out.str();
}

ActivityPolynomial activity_polynomial(const Graph &g) {
  ActivityPolynomial p;
  for (const ActivityReport &e : cover(g).entries) {
    ++p.coefficients[{e.generator.size(), e.external.size(), e.internal.size()}];
  }
  return p;
}

DifferenceDecomposition mis_difference_decomposition(const Graph &g, const VertexSet &a,
                                                     const VertexSet &b) {
  require_maximal(g, a);
  require_maximal(g, b);
  if (a == b) throw InvalidInput("decomposition needs two distinct maximal independent sets");
  DifferenceDecomposition d;
  d.removed = a - b;
  d.added = b - a;
  d.added_meets_ext_a = d.added.intersects(ext_active(g, a));
  d.removed_meets_ext_b = d.removed.intersects(ext_active(g, b));
  return d;
}

std::optional<VertexSet> larger_independent_in_upper(const Graph &g, const VertexSet &s) {
  const VertexSet upper = s | ext_active(g, s);
  const InducedSubgraph sub = induced_subgraph(g, upper);
  std::optional<VertexSet> best;
  for (const VertexSet &m : enumerate_maximal_independent_sets(sub.graph)) {
    if (m.size() > s.size() && (!best || m.size() > best->size())) best = sub.lift(m);
  }
  return best;
}

} // namespace vact
