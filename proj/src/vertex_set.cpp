#include "vact/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "vact/error.hpp"

namespace vact {

namespace {

void check_label(Vertex v) {
  if (v < 1 || v > kMaxVertices) {
    throw InvalidInput("vertex label " + std::to_string(v) + " outside 1.." +
                       std::to_string(kMaxVertices));
  }
}

} // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> labels) {
  for (Vertex v : labels) insert(v);
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  first = std::max(first, 1);
  last = std::min(last, kMaxVertices);
  if (first > last) return {};
  const int width = last - first + 1;
  const std::uint64_t ones = width == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
  return from_bits(ones << (first - 1));
}

VertexSet VertexSet::from_vector(const std::vector<Vertex> &labels) {
  VertexSet s;
  for (Vertex v : labels) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  check_label(v);
  bits_ |= std::uint64_t{1} << (v - 1);
}

void VertexSet::erase(Vertex v) {
  check_label(v);
  bits_ &= ~(std::uint64_t{1} << (v - 1));
}

Vertex VertexSet::min() const {
  if (empty()) throw std::logic_error("min() of an empty vertex set");
  return std::countr_zero(bits_) + 1;
}

Vertex VertexSet::max() const {
  if (empty()) throw std::logic_error("max() of an empty vertex set");
  return 64 - std::countl_zero(bits_);
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

VertexSet labels_below(Vertex v) { return VertexSet::range(1, v - 1); }

VertexSet labels_above(Vertex v, int n) { return VertexSet::range(v + 1, n); }

bool canonical_less(const VertexSet &a, const VertexSet &b) {
  const VertexSet diff = a ^ b;
  if (diff.empty()) return false;
  const Vertex d = diff.min();
  // Members below d are shared. Whichever set owns d continues its list with
  // d; the other continues with something larger or has already ended.
  const VertexSet beyond = VertexSet::range(d + 1, kMaxVertices);
  if (a.contains(d)) return !(b & beyond).empty();
  return (a & beyond).empty();
}

std::string to_string(const VertexSet &s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

} // namespace vact
